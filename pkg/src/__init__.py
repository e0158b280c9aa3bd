"""GAFSV - online signature verification from asymmetric Gramian angular fields."""
