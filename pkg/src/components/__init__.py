"""Broken Lefschetz fibration diagrams: fibers, monodromy, base diagrams, moves and file formats."""
