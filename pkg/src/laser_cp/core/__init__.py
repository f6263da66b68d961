"""Application layer: composition root, service and result types."""
