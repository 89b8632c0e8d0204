"""Exception types shared across the fuzzy library."""


class ConfigurationError(ValueError):
    """A variable, rule base, engine or controller parameter is malformed."""


class InvalidInputError(ValueError):
    """Crisp inputs or input files cannot be used as given."""
