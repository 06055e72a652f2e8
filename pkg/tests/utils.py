import random
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from nwlab.algebra import GeneratorTag, LoopGenerator
from nwlab.modules import ModuleState
from nwlab.singular import in_span

TAGS = tuple(GeneratorTag)


def gen(text: str) -> LoopGenerator:
    """Shorthand for LoopGenerator.parse."""
    return LoopGenerator.parse(text)


def word(text: str) -> tuple[LoopGenerator, ...]:
    """A word written as space separated generator literals, e.g. "c:-1 b:0"."""
    return tuple(gen(piece) for piece in text.split())


def state(*terms: tuple[str, int, Fraction | int]) -> ModuleState:
    """A module state from (monomial literal, base index, coefficient) triples."""
    return ModuleState(((word(text), index), Fraction(coeff)) for text, index, coeff in terms)


def proportional(x: ModuleState, y: ModuleState) -> bool:
    """Whether two nonzero states agree up to a nonzero scalar."""
    return not x.is_zero and not y.is_zero and in_span(x, [y]) and in_span(y, [x])


def random_words(
    count: int, max_length: int = 4, max_mode: int = 3, seed: int = 20240501, rng: Optional[random.Random] = None
) -> list[tuple[LoopGenerator, ...]]:
    """Reproducible random words in the loop generators."""
    rng = rng or random.Random(seed)
    words = []
    for _ in range(count):
        length = rng.randint(1, max_length)
        words.append(tuple(LoopGenerator(rng.choice(TAGS), rng.randint(-max_mode, max_mode)) for _ in range(length)))
    return words


def all_generators(max_mode: int) -> Sequence[LoopGenerator]:
    return [LoopGenerator(tag, n) for n in range(-max_mode, max_mode + 1) for tag in TAGS]


def random_states(
    module: Any,
    count: int,
    max_height: int = 3,
    indices: Optional[Iterable[int]] = None,
    terms: int = 3,
    seed: int = 20240501,
) -> list[ModuleState]:
    """Reproducible random combinations of basis vectors of height at most `max_height`."""
    rng = random.Random(seed)
    keys = module.basis_up_to(max_height, indices)
    states = []
    for _ in range(count):
        chosen = rng.sample(keys, min(terms, len(keys)))
        states.append(ModuleState((key, Fraction(rng.randint(1, 5), rng.randint(1, 3))) for key in chosen))
    return states
