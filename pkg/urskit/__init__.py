"""urskit — finite-scale toolkit for groupoids of uniformly recurrent subgroups."""

__version__ = "0.1.0"
