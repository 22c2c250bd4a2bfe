"""picone-lab: numerical verification of Picone identities for the p-biharmonic operator."""

__version__ = "0.1.0"
