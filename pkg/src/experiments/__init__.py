"""Experiment drivers built on the training and verification packages."""
