"""Maxwell-Chern-Simons gauge theory in first-order (DKP) form, with verifiers."""

__version__ = "0.1.0"
