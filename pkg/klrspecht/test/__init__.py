"""Initialize `klrspecht` tests."""
