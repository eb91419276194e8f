"""Executable lower-bound witnesses, certificate checking and the cycle/cut duality check."""

from src.verifier.certificate import certificate_from_json, certificate_to_json, check_certificate
from src.verifier.duality import duality_check
from src.verifier.types import CertificateCheck, CertificateReason, GridBoundaryWitness, WitnessCertificate
from src.verifier.witness import InvariantViolation, grid_boundary_witness, hamming_witness, mutual_successor_edge
