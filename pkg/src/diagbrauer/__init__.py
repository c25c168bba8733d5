"""Brauer groups of diagonal quartic surfaces."""
