"""Byte-stream container with skeleton-guided decoding.

Layout, all integers big-endian:

    magic "SKH1" | u16 n | n * (u8 symbol, u64 weight) | u64 count | payload

count is the number of encoded symbols, not bits; payload is the
concatenated codewords MSB-first, zero-padded to a byte boundary.  The
decoder rebuilds the same canonical code from the header weights, so no
codeword table travels in the container.

Decoding descends the skeleton instead of the full code tree: reaching a
collapsed leaf of height m, the next m raw bits index the consecutive
run of symbols that the collapsed perfect subtree held.
"""

from __future__ import annotations

import struct
from collections import Counter

from .errors import (
    CorruptHeaderError,
    EmptyAlphabetError,
    NonPositiveWeightError,
    PaddingNotZeroError,
    TruncatedStreamError,
    UnknownSymbolError,
    WeightOverflowError,
)
from .skeleton import optimal_skeleton, shrink_tree

MAGIC = b"SKH1"

_HEADER = struct.Struct(">4sH")
_RECORD = struct.Struct(">BQ")
_COUNT = struct.Struct(">Q")


class _DescentNode:
    """Skeleton mirrored for decoding: leaves hold a run of symbols."""

    __slots__ = ("zero", "one", "tail_bits", "symbols")

    def __init__(self, zero=None, one=None, tail_bits=0, symbols=()):
        self.zero = zero
        self.one = one
        self.tail_bits = tail_bits
        self.symbols = symbols


class Codebook:
    """Canonical codebook for a symbol-to-weight mapping."""

    __slots__ = ("symbols", "weights", "codes", "code_strings", "code_tree", "descent")

    def __init__(self, symbols, weights, codes, code_strings, code_tree, descent):
        self.symbols = symbols
        self.weights = weights
        self.codes = codes
        self.code_strings = code_strings
        self.code_tree = code_tree
        self.descent = descent


def _tree_leaves(node):
    """Leaves of a code tree, left to right."""
    out = []
    stack = [node]
    while stack:
        cur = stack.pop()
        if cur.left is None:
            out.append(cur)
        else:
            stack.append(cur.right)
            stack.append(cur.left)
    return out


def _descent_from(code_tree) -> _DescentNode:
    skel = shrink_tree(code_tree)
    post = []
    stack = [skel]
    while stack:
        node = stack.pop()
        post.append(node)
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)
    built: dict[int, _DescentNode] = {}
    for node in reversed(post):
        if node.left is None:
            syms = tuple(leaf.symbol for leaf in _tree_leaves(node.source))
            built[id(node)] = _DescentNode(tail_bits=node.height, symbols=syms)
        else:
            built[id(node)] = _DescentNode(zero=built[id(node.left)],
                                           one=built[id(node.right)])
    return built[id(skel)]


def codebook_for_weights(mapping) -> Codebook:
    """Build the canonical codebook shared by encoder and decoder.

    mapping takes byte values (0..255) to positive weights below 2**64.
    The code depends only on the mapping, never on insertion order.
    """
    if len(mapping) == 0:
        raise EmptyAlphabetError("cannot build a code for zero symbols")
    symbols = sorted(mapping)
    for s in symbols:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s <= 255:
            raise ValueError(f"symbol {s!r} is not a byte value")
    weights = [mapping[s] for s in symbols]
    for x in weights:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise NonPositiveWeightError(f"weight {x!r} is not a positive integer")
        if x >= 1 << 64:
            raise WeightOverflowError(f"weight {x} does not fit the container field")

    result = optimal_skeleton(weights)
    code_tree = result.code_tree
    for leaf in _tree_leaves(code_tree):
        leaf.symbol = symbols[leaf.symbol]

    codes = {}
    code_strings = {}
    stack = [(code_tree, 0, 0)]
    while stack:
        node, value, length = stack.pop()
        if node.left is None:
            codes[node.symbol] = (value, length)
            code_strings[node.symbol] = format(value, f"0{length}b") if length else ""
            continue
        stack.append((node.right, (value << 1) | 1, length + 1))
        stack.append((node.left, value << 1, length + 1))

    return Codebook(
        symbols=tuple(symbols),
        weights=tuple(weights),
        codes=codes,
        code_strings=code_strings,
        code_tree=code_tree,
        descent=_descent_from(code_tree),
    )


def encode(data: bytes, weights=None) -> bytes:
    """Pack data into a container.

    With weights=None the weights are the byte frequencies of data, and
    empty data yields the valid empty container.  An explicit mapping must
    not be empty and must cover every byte that occurs.
    """
    if weights is None:
        counts = Counter(data)
        if not counts:
            return _HEADER.pack(MAGIC, 0) + _COUNT.pack(0)
        mapping = dict(counts)
    else:
        mapping = dict(weights)
    book = codebook_for_weights(mapping)

    strings = book.code_strings
    try:
        bits = "".join([strings[b] for b in data])
    except KeyError:
        missing = next(b for b in data if b not in strings)
        raise UnknownSymbolError(f"byte {missing} has no weight") from None

    parts = [_HEADER.pack(MAGIC, len(book.symbols))]
    for s, x in zip(book.symbols, book.weights):
        parts.append(_RECORD.pack(s, x))
    parts.append(_COUNT.pack(len(data)))
    nbits = len(bits)
    if nbits:
        nbytes = (nbits + 7) // 8
        parts.append((int(bits, 2) << (8 * nbytes - nbits)).to_bytes(nbytes, "big"))
    return b"".join(parts)


def _parse_container(blob: bytes):
    """Split a container into (codebook or None, count, payload bytes)."""
    if len(blob) < _HEADER.size:
        raise TruncatedStreamError("container shorter than the fixed header")
    magic, n = _HEADER.unpack_from(blob, 0)
    if magic != MAGIC:
        raise CorruptHeaderError(f"bad magic {magic!r}")
    need = _HEADER.size + n * _RECORD.size + _COUNT.size
    if len(blob) < need:
        raise TruncatedStreamError("container shorter than its symbol table")
    mapping = {}
    off = _HEADER.size
    for _ in range(n):
        s, x = _RECORD.unpack_from(blob, off)
        off += _RECORD.size
        if s in mapping:
            raise CorruptHeaderError(f"symbol {s} listed twice")
        if x == 0:
            raise CorruptHeaderError(f"symbol {s} carries weight zero")
        mapping[s] = x
    (count,) = _COUNT.unpack_from(blob, off)
    payload = blob[need:]
    if n == 0:
        if count != 0:
            raise CorruptHeaderError("empty alphabet cannot encode symbols")
        if payload:
            raise CorruptHeaderError("payload longer than the encoded stream")
        return None, 0, payload
    return codebook_for_weights(mapping), count, payload


def _finish(payload: bytes, bits: str, pos: int) -> None:
    """Enforce exact payload length and zero padding after pos used bits."""
    if len(payload) > (pos + 7) // 8:
        raise CorruptHeaderError("payload longer than the encoded stream")
    tail = bits[pos:]
    if tail and int(tail, 2):
        raise PaddingNotZeroError("padding bits are not zero")


def _payload_bits(payload: bytes) -> str:
    if not payload:
        return ""
    return format(int.from_bytes(payload, "big"), f"0{8 * len(payload)}b")


def decode(blob: bytes) -> bytes:
    """Unpack a container by skeleton descent."""
    book, count, payload = _parse_container(blob)
    if book is None:
        return b""
    bits = _payload_bits(payload)
    total = len(bits)
    root = book.descent
    out = bytearray()
    pos = 0
    for _ in range(count):
        node = root
        while node.symbols == ():
            if pos >= total:
                raise TruncatedStreamError("stream ends inside a codeword")
            node = node.one if bits[pos] == "1" else node.zero
            pos += 1
        t = node.tail_bits
        if t:
            if pos + t > total:
                raise TruncatedStreamError("stream ends inside a codeword")
            idx = int(bits[pos:pos + t], 2)
            pos += t
            out.append(node.symbols[idx])
        else:
            out.append(node.symbols[0])
    _finish(payload, bits, pos)
    return bytes(out)


def decode_via_code_tree(blob: bytes) -> bytes:
    """Unpack a container by walking the full code tree, bit by bit."""
    book, count, payload = _parse_container(blob)
    if book is None:
        return b""
    bits = _payload_bits(payload)
    total = len(bits)
    root = book.code_tree
    out = bytearray()
    pos = 0
    for _ in range(count):
        node = root
        while node.left is not None:
            if pos >= total:
                raise TruncatedStreamError("stream ends inside a codeword")
            node = node.right if bits[pos] == "1" else node.left
            pos += 1
        out.append(node.symbol)
    _finish(payload, bits, pos)
    return bytes(out)
