"""Exception types shared across the package."""


class ContractViolationError(RuntimeError):
    """A numerical contract was violated (mismatched pulse/node timing,
    malformed density matrix, measurement requested outside the Measure
    regime). Distinct from ValueError so the CLI can map it to its own
    exit code."""
