"""nexf CLI tests."""
