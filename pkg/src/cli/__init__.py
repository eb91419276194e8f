"""
CLI package: run ``python -m src.cli`` (see ``main`` and ``__main__``).
One ``*_cmd`` module per subcommand; the table sweep lives in ``table_pipeline``.
"""
