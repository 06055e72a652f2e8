"""Coordinator implementation for irreducibility probes.
    Sweeping the (bi)graded components of an induced module and aggregating
    the singular reports."""
# coordinator.py

from __future__ import annotations

import asyncio
from dataclasses import dataclass, field
from typing import Optional

from .const import _LOGGER
from .exceptions import InvalidTruncation
from .modules import InducedModule, TrivialModule
from .singular import Component, RaisingSet, SingularReport, find_singular, match_closed_forms


@dataclass
class ProbeVerdict:
    """Outcome of a sweep: either nothing up to `max_height` or the nonempty reports."""

    max_height: int
    reports: list[SingularReport] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.reports)

    @property
    def label(self) -> str:
        return "Found" if self.found else "NoSingularUpTo"


class ProbeCoordinator:
    """Run the singular solver over every component up to a height.

    Trivial bases are swept by height. Verma and intermediate bases have
    infinite height components, so they are swept by (height, d-weight)
    with the weight offset from the top weight ranging over
    [-height, height + spread].
    """

    def __init__(
        self,
        module: InducedModule,
        raising: RaisingSet,
        max_height: int,
        spread: Optional[int] = None,
        match: bool = True,
    ) -> None:
        """Initialize the coordinator."""
        if max_height > module.depth:
            raise InvalidTruncation(f"probe height {max_height} exceeds module depth {module.depth}")
        self.module = module
        self.raising = raising
        self.max_height = max_height
        self.spread = max_height if spread is None else spread
        self.match = match

    def components(self) -> list[Component]:
        base = self.module.base
        if isinstance(base, TrivialModule):
            return [Component(ht) for ht in range(1, self.max_height + 1)]
        top = base.weight(base.highest_index)
        return [
            Component(ht, top - offset)
            for ht in range(1, self.max_height + 1)
            for offset in range(-ht, ht + self.spread + 1)
        ]

    def _solve(self, component: Component) -> SingularReport:
        report = find_singular(self.module, component, self.raising)
        if self.match and report.kernel:
            report.matched = match_closed_forms(report, self.module)
        return report

    def _aggregate(self, reports: list[SingularReport]) -> ProbeVerdict:
        found = [report for report in reports if report.kernel]
        _LOGGER.info(
            "Probe swept %d components up to height %d, %d with singular vectors",
            len(reports), self.max_height, len(found),
        )
        return ProbeVerdict(self.max_height, found)

    def sweep(self) -> ProbeVerdict:
        """Solve every component in order."""
        return self._aggregate([self._solve(component) for component in self.components()])

    async def async_sweep(self) -> ProbeVerdict:
        """Solve components concurrently in worker threads; results keep component order."""
        reports = await asyncio.gather(
            *(asyncio.to_thread(self._solve, component) for component in self.components())
        )
        return self._aggregate(list(reports))


def irreducibility_probe(
    module: InducedModule, max_height: int, raising: RaisingSet, spread: Optional[int] = None
) -> ProbeVerdict:
    """Sweep all components up to `max_height` for singular vectors."""
    return ProbeCoordinator(module, raising, max_height, spread).sweep()
