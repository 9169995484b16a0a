"""orbit_atlas: exact classification of the nilpotent (SL2(R))^4-orbits
on V2 x V2 x V2 x V2 and of the corresponding symmetric-pair orbits in
the split D4 algebra."""

__version__ = "0.1.0"
