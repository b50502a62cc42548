"""Verification reports: a pass flag plus every failure found, with both sides.

All verifiers in this package return a VerificationReport rather than a bare
boolean, so a sign error shows up as the exact tuple and the two values that
disagreed.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    condition: str
    inputs: tuple
    lhs: object
    rhs: object

    def __str__(self):
        return "%s at %s: lhs=%s rhs=%s" % (
            self.condition, self.inputs, self.lhs, self.rhs)


@dataclass
class VerificationReport:
    title: str
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self):
        return not self.failures

    def expect_equal(self, condition, inputs, lhs, rhs):
        """Count one check; record a failure when the two sides differ."""
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(condition, tuple(inputs), lhs, rhs))

    def expect(self, condition, inputs, ok, lhs=None, rhs=None):
        self.checked += 1
        if not ok:
            self.failures.append(Failure(condition, tuple(inputs), lhs, rhs))

    def absorb(self, other, prefix=None):
        """Fold another report into this one, optionally prefixing labels."""
        self.checked += other.checked
        for f in other.failures:
            name = f.condition if prefix is None else "%s:%s" % (prefix, f.condition)
            self.failures.append(Failure(name, f.inputs, f.lhs, f.rhs))

    def failing_conditions(self):
        return sorted({f.condition for f in self.failures})

    def summary(self, limit=5):
        if self.passed:
            return "%s: pass (%d checks)" % (self.title, self.checked)
        lines = ["%s: FAIL (%d checks, %d failures)" % (
            self.title, self.checked, len(self.failures))]
        for f in self.failures[:limit]:
            lines.append("  " + str(f))
        if len(self.failures) > limit:
            lines.append("  ... %d more" % (len(self.failures) - limit))
        return "\n".join(lines)
