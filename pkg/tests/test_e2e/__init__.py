"""End-to-end tests: full synth, train and eval pipelines."""
