"""Command routing: request models and dispatch."""
