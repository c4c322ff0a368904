"""Fixture catalog, inventory reconstruction and reporting."""
