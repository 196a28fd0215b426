// Acceptance checks land here once the full surface exists.
