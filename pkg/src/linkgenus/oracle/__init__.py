"""Exact brute-force oracle for the Hilbert-function duality of linked points."""
