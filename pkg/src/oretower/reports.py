"""Structured results shared by every check."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: list = field(default_factory=list)
    residual: object = None
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def fail(self, message, residual=None):
        self.passed = False
        self.details.append(message)
        if residual is not None and self.residual is None:
            self.residual = residual
        return self

    def note(self, message):
        self.details.append(message)
        return self

    def __str__(self):
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return "\n".join([head] + [f"  {d}" for d in self.details])

    def as_dict(self):
        return {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "details": list(self.details),
            "residual": None if self.residual is None else str(self.residual),
            "data": {k: _plain(v) for k, v in self.data.items()},
        }


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return str(v)


def merge(name, reports):
    out = CheckReport(name, all(r.passed for r in reports))
    for r in reports:
        for d in r.details:
            out.details.append(f"{r.name}: {d}")
        if not r.passed and out.residual is None:
            out.residual = r.residual
    return out
