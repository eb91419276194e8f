"""DOT export (jinja2 templates under ``templates/``)."""

from src.export.dot import graph_to_dot, tree_to_dot
