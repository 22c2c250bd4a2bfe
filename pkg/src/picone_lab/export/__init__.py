"""Report export: JSON envelopes and plot-ready CSV."""
