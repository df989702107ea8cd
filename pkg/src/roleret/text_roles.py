"""Caption tokenization, noun/verb role tagging, and pooled role vectors.

A caption is split into lowercase tokens, each token is tagged NOUN / VERB /
OTHER through a plain lexicon, and the NOUN and VERB groups are mean-pooled
into one vector per role. Token vectors come from an :class:`EmbeddingTable`,
which is either loaded from a TSV file or generated on the fly from a
deterministic per-token hash.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError, TokenizationEmpty

NOUN = "NOUN"
VERB = "VERB"
OTHER = "OTHER"

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class Caption:
    """One narration with its verb-class and noun-class annotations."""

    id: str
    video_id: str
    text: str
    verb_class: int
    noun_classes: frozenset[int]

    def __post_init__(self):
        if not self.text:
            raise ValueError(f"caption {self.id!r}: empty text")
        if self.verb_class < 0 or any(n < 0 for n in self.noun_classes):
            raise ValueError(f"caption {self.id!r}: negative class id")


@dataclass
class RoleLexicon:
    """Case-insensitive token -> NOUN/VERB map; everything else is OTHER."""

    entries: dict[str, str] = field(default_factory=dict)

    def tag(self, token: str) -> str:
        return self.entries.get(token.lower(), OTHER)


def load_lexicon(path) -> RoleLexicon:
    """Read a `token<TAB>TAG` file, TAG in {NOUN, VERB}."""
    entries: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(f"{path}:{lineno}: expected 'token<TAB>TAG'")
            token, tag = parts[0].lower(), parts[1]
            if tag not in (NOUN, VERB):
                raise ParseError(f"{path}:{lineno}: tag must be NOUN or VERB, got {tag!r}")
            if token in entries:
                raise ParseError(f"{path}:{lineno}: duplicate token {token!r}")
            entries[token] = tag
    return RoleLexicon(entries)


def save_lexicon(lexicon: RoleLexicon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for token in sorted(lexicon.entries):
            fh.write(f"{token}\t{lexicon.entries[token]}\n")


def tokenize(text: str) -> list[str]:
    """Lowercase and split on whitespace/punctuation, dropping the punctuation."""
    tokens = _TOKEN_RE.findall(text.lower())
    if not tokens:
        raise TokenizationEmpty(f"no tokens in {text!r}")
    return tokens


def tag_roles(tokens: list[str], lexicon: RoleLexicon) -> list[tuple[str, str]]:
    """Tag every token via the lexicon; unknown tokens become OTHER."""
    if not tokens:
        raise ValueError("tokens must be non-empty")
    return [(t, lexicon.tag(t)) for t in tokens]


def _fnv1a64(token: str) -> int:
    h = _FNV_OFFSET
    for byte in token.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def hash_embed(token: str, dim: int, seed: int) -> np.ndarray:
    """Deterministic pseudo-random vector for a token, uniform in [-0.5, 0.5].

    The PRNG is seeded with FNV-1a(token) XOR seed, so the same (token, dim,
    seed) triple always yields bit-identical output.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    state = _fnv1a64(token) ^ (seed & _MASK64)
    rng = np.random.Generator(np.random.PCG64(state))
    return rng.uniform(-0.5, 0.5, size=dim)


@dataclass
class EmbeddingTable:
    """Token -> vector source: an explicit map, hash-seeded fallback otherwise.

    A fixed table always returns the same vector for the same token.
    """

    dim: int
    vectors: dict[str, np.ndarray] | None = None
    seed: int = 0

    def vector(self, token: str) -> np.ndarray:
        token = token.lower()
        if self.vectors is not None and token in self.vectors:
            return self.vectors[token]
        return hash_embed(token, self.dim, self.seed)

    @classmethod
    def hashed(cls, dim: int, seed: int) -> "EmbeddingTable":
        return cls(dim=dim, vectors=None, seed=seed)

    @classmethod
    def materialized(cls, tokens, dim: int, seed: int) -> "EmbeddingTable":
        """Hash-seeded vectors frozen into an explicit map for the given vocabulary."""
        vecs = {t.lower(): hash_embed(t.lower(), dim, seed) for t in tokens}
        return cls(dim=dim, vectors=vecs, seed=seed)


def load_embedding_table(path) -> EmbeddingTable:
    """Read a `token<TAB>f1 f2 ... fdim` file."""
    vectors: dict[str, np.ndarray] = {}
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(f"{path}:{lineno}: expected 'token<TAB>values'")
            token = parts[0].lower()
            try:
                vec = np.array([float(v) for v in parts[1].split()], dtype=np.float64)
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: bad float ({exc})") from exc
            if dim is None:
                dim = vec.size
            elif vec.size != dim:
                raise ParseError(f"{path}:{lineno}: dim {vec.size} != {dim}")
            if token in vectors:
                raise ParseError(f"{path}:{lineno}: duplicate token {token!r}")
            vectors[token] = vec
    if dim is None:
        raise ParseError(f"{path}: empty embedding table")
    return EmbeddingTable(dim=dim, vectors=vectors)


def save_embedding_table(table: EmbeddingTable, path) -> None:
    if table.vectors is None:
        raise ValueError("only materialized tables can be saved")
    with open(path, "w", encoding="utf-8") as fh:
        for token in sorted(table.vectors):
            values = " ".join(repr(float(v)) for v in table.vectors[token])
            fh.write(f"{token}\t{values}\n")


@dataclass
class RoleVectors:
    """Mean-pooled per-role vectors for one caption."""

    noun: np.ndarray
    verb: np.ndarray
    missing_noun: bool
    missing_verb: bool

    @property
    def missing_any(self) -> bool:
        return self.missing_noun or self.missing_verb


def role_vectors(tagged: list[tuple[str, str]], table: EmbeddingTable) -> RoleVectors:
    """Mean of NOUN-tagged token vectors and of VERB-tagged ones.

    Tokens are summed in lexicographically sorted order so the mean is
    bit-reproducible under any permutation of the input. A role with no
    tokens yields the zero vector and its missing flag.
    """
    if not tagged:
        raise ValueError("tagged tokens must be non-empty")
    out = {}
    flags = {}
    for role in (NOUN, VERB):
        tokens = sorted(t for t, tag in tagged if tag == role)
        if not tokens:
            out[role] = np.zeros(table.dim, dtype=np.float64)
            flags[role] = True
            continue
        acc = np.zeros(table.dim, dtype=np.float64)
        for t in tokens:
            acc += table.vector(t)
        out[role] = acc / len(tokens)
        flags[role] = False
    return RoleVectors(noun=out[NOUN], verb=out[VERB],
                       missing_noun=flags[NOUN], missing_verb=flags[VERB])
