"""Infection size-aware random forest screening pipeline.

Volumetric feature extraction from CT masks, LASSO feature selection,
size-split random-forest classification, and size-stratified
cross-validated evaluation, plus a synthetic cohort generator for
desk-scale verification.
"""

__version__ = "0.1.0"
