"""Result-file layout: canonical text report plus a JSON variant."""
import json
import re
from dataclasses import dataclass, field

from .dynamic_range import exact_range

PER_LINE = 10
_RANGE_RE = re.compile(r"Range:\s*from\s*X=(\d+)\s*to\s*Y=(\d+)")
_COUNT_RE = re.compile(r"k=(\d+)")
_BITS_RE = re.compile(r"dynamic range is\s+(\d+)\s+bits")


@dataclass
class ResultReport:
    lo: int
    hi: int
    moduli: list
    dynamic_range_bits: int
    warnings: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    @property
    def count(self):
        return len(self.moduli)

    @classmethod
    def from_moduli_set(cls, mset):
        bits = exact_range(mset.moduli).bits
        return cls(
            mset.range_lo,
            mset.range_hi,
            list(mset.moduli),
            bits,
            list(mset.warnings),
            [r.to_dict() for r in mset.trace],
        )

    def default_filename(self, fmt="text"):
        ext = "json" if fmt == "structured" else "txt"
        return f"coprimes_result_{self.lo}_{self.hi}.{ext}"

    def to_text(self):
        lines = [
            f"Range: from X={self.lo} to Y={self.hi}",
            f"The number of co-primes in the set is k={self.count}",
            f"The dynamic range is {self.dynamic_range_bits} bits",
            "The set of co-primes:",
        ]
        width = max(6, len(str(max(self.moduli))) + 1)
        ordered = sorted(self.moduli, reverse=True)
        for i in range(0, len(ordered), PER_LINE):
            lines.append("".join(f"{m:>{width}}" for m in ordered[i:i + PER_LINE]))
        lines.extend(f"Warning: {w}" for w in self.warnings)
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "range": [self.lo, self.hi],
            "count": self.count,
            "dynamic_range_bits": self.dynamic_range_bits,
            "moduli": sorted(self.moduli, reverse=True),
            "warnings": self.warnings,
            "trace": self.trace,
        }
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt="text"):
        return self.to_json() if fmt == "structured" else self.to_text()


def parse_report(text):
    """Read a text or JSON report back.

    Returns ``(moduli, declared)`` where ``declared`` holds whatever of
    ``range``, ``count`` and ``bits`` the input states. Plain whitespace- or
    comma-separated integer lists are accepted too (empty ``declared``).
    Raises ValueError when no moduli can be found.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        declared = {
            "range": tuple(doc["range"]) if "range" in doc else None,
            "count": doc.get("count"),
            "bits": doc.get("dynamic_range_bits"),
        }
        return [int(m) for m in doc["moduli"]], {k: v for k, v in declared.items() if v is not None}

    declared = {}
    body = stripped.splitlines()
    if "The set of co-primes:" in stripped:
        header, _, rest = stripped.partition("The set of co-primes:")
        if m := _RANGE_RE.search(header):
            declared["range"] = (int(m.group(1)), int(m.group(2)))
        if m := _COUNT_RE.search(header):
            declared["count"] = int(m.group(1))
        if m := _BITS_RE.search(header):
            declared["bits"] = int(m.group(1))
        body = rest.strip().splitlines()

    moduli = []
    for line in body:
        if line.startswith("Warning:"):
            continue
        for tok in line.replace(",", " ").split():
            moduli.append(int(tok))
    if not moduli:
        raise ValueError("no moduli found in input")
    return moduli, declared
