"""Source generator for the lane-parallel hash kernels in ``_kernels.py``.

Each compression function is fully unrolled inside a single loop over
``LANES`` independent messages, which lets LLVM vectorize across lanes.
Run ``python -m pseudaudit._kernelgen`` to regenerate the module after
editing this file.
"""

from __future__ import annotations

import math
from pathlib import Path

LANES = 16

_U32 = "np.uint32"


def _rotl(x: str, n: int) -> str:
    return f"(({x} << {_U32}({n})) | ({x} >> {_U32}({32 - n})))"


def _bswap(x: str) -> str:
    return (
        f"((({x} & {_U32}(0xFF)) << {_U32}(24)) | ((({x} >> {_U32}(8)) & {_U32}(0xFF)) << {_U32}(16))"
        f" | ((({x} >> {_U32}(16)) & {_U32}(0xFF)) << {_U32}(8)) | ({x} >> {_U32}(24)))"
    )


def sha1_body() -> list[str]:
    out = [f"w{j} = W[{j}, l]" for j in range(16)]
    out += [
        f"a = {_U32}(0x67452301)",
        f"b = {_U32}(0xEFCDAB89)",
        f"c = {_U32}(0x98BADCFE)",
        f"d = {_U32}(0x10325476)",
        f"e = {_U32}(0xC3D2E1F0)",
    ]
    A, B, C, D, E = "abcde"
    for j in range(80):
        s = j % 16
        if j >= 16:
            out.append(f"x = w{(j - 3) % 16} ^ w{(j - 8) % 16} ^ w{(j - 14) % 16} ^ w{s}")
            out.append(f"w{s} = {_U32}({_rotl('x', 1)})")
        if j < 20:
            f, k = f"(({B} & {C}) | (~{B} & {D}))", "0x5A827999"
        elif j < 40:
            f, k = f"({B} ^ {C} ^ {D})", "0x6ED9EBA1"
        elif j < 60:
            f, k = f"(({B} & {C}) | ({B} & {D}) | ({C} & {D}))", "0x8F1BBCDC"
        else:
            f, k = f"({B} ^ {C} ^ {D})", "0xCA62C1D6"
        out.append(f"{E} = {_U32}({_rotl(A, 5)} + {f} + {E} + {_U32}({k}) + w{s})")
        out.append(f"{B} = {_U32}({_rotl(B, 30)})")
        A, B, C, D, E = E, A, B, C, D
    init = ["0x67452301", "0xEFCDAB89", "0x98BADCFE", "0x10325476", "0xC3D2E1F0"]
    for i, (v, h0) in enumerate(zip((A, B, C, D, E), init)):
        out.append(f"H[{i}, l] = {_U32}({_U32}({h0}) + {v})")
    return out


_MD5_SHIFTS = [7, 12, 17, 22] * 4 + [5, 9, 14, 20] * 4 + [4, 11, 16, 23] * 4 + [6, 10, 15, 21] * 4
_MD5_K = [int(abs(math.sin(i + 1)) * 2**32) & 0xFFFFFFFF for i in range(64)]


def md5_body() -> list[str]:
    # Output words are byte-swapped so H holds the digest as big-endian words.
    out = [f"w{j} = W[{j}, l]" for j in range(16)]
    out += [
        f"a = {_U32}(0x67452301)",
        f"b = {_U32}(0xEFCDAB89)",
        f"c = {_U32}(0x98BADCFE)",
        f"d = {_U32}(0x10325476)",
    ]
    A, B, C, D = "abcd"
    for i in range(64):
        if i < 16:
            f, g = f"(({B} & {C}) | (~{B} & {D}))", i
        elif i < 32:
            f, g = f"(({D} & {B}) | (~{D} & {C}))", (5 * i + 1) % 16
        elif i < 48:
            f, g = f"({B} ^ {C} ^ {D})", (3 * i + 5) % 16
        else:
            f, g = f"({C} ^ ({B} | ~{D}))", (7 * i) % 16
        out.append(f"x = {_U32}({A} + {f} + {_U32}({hex(_MD5_K[i])}) + w{g})")
        out.append(f"{A} = {_U32}({B} + {_rotl('x', _MD5_SHIFTS[i])})")
        A, B, C, D = D, A, B, C
    for i, (v, h0) in enumerate(zip((A, B, C, D), ["0x67452301", "0xEFCDAB89", "0x98BADCFE", "0x10325476"])):
        out.append(f"x = {_U32}({_U32}({h0}) + {v})")
        out.append(f"H[{i}, l] = {_U32}({_bswap('x')})")
    return out


def _indent(lines: list[str], n: int) -> str:
    pad = " " * n
    return "\n".join(pad + x for x in lines)


def _scan_source(name: str, compress: str, md5: bool, hist: bool) -> str:
    # Message layout for one outer block: constant prefix words ``pw`` of q
    # bytes, then the 8-byte tail (suffix + 0x80 + zero fill) spliced in at
    # byte q, then the bit length.  All lanes share q, so the spliced words
    # sit at the same row for every lane.
    if md5:
        word = lambda e: _bswap(e)  # noqa: E731
        length_row, zero_row = 14, 15
    else:
        word = lambda e: e  # noqa: E731
        length_row, zero_row = 15, 14
    if hist:
        args = "pw, qs, bases, lo, hi, tail, slen, wi, sh, umask, hist"
        check = """            for l in range(LANES):
                if i0 + l < hi:
                    x = (np.uint64(H[wi, l]) << np.uint64(32)) | np.uint64(H[wi + 1, l])
                    hist[(x >> sh) & umask] += 1
"""
        ret = "    return 0"
    else:
        args = "pw, qs, bases, lo, hi, tail, slen, tables, wis, shs, umask, out_pos, out_bucket, out_addr"
        check = """            for p in range(npos):
                wi = wis[p]
                sh = shs[p]
                for l in range(LANES):
                    x = (np.uint64(H[wi, l]) << np.uint64(32)) | np.uint64(H[wi + 1, l])
                    bucket = tables[p, (x >> sh) & umask]
                    if bucket >= 0 and i0 + l < hi:
                        if cnt < cap:
                            out_pos[cnt] = p
                            out_bucket[cnt] = bucket
                            out_addr[cnt] = np.uint32(base + i0 + l)
                        cnt += 1
"""
        ret = "    return cnt"
    return f'''
@nb.njit(nogil=True, cache=True)
def {name}({args}):
    W = np.zeros((16, LANES), np.uint32)
    H = np.zeros((6, LANES), np.uint32)
{"" if hist else "    cnt = 0" + chr(10) + "    npos = tables.shape[0]" + chr(10) + "    cap = out_addr.size" + chr(10)}    for o in range(qs.size):
        q = qs[o]
{"" if hist else "        base = np.int64(bases[o])" + chr(10)}        q4 = q // 4
        r = q % 4
        s1 = np.uint64(32 + 8 * r)
        s2 = np.uint64(8 * r)
        s3 = np.uint64(32 - 8 * r)
        m3 = (np.uint64(1) << np.uint64(8 * r)) - np.uint64(1)
        for j in range(16):
            for l in range(LANES):
                W[j, l] = {word("pw[o, j]")}
        c0 = pw[o, q4]
        for i0 in range(lo, hi, LANES):
            for l in range(LANES):
                k = min(i0 + l, hi - 1)
                x = tail[k]
                W[q4, l] = {word(f"{_U32}(c0 | {_U32}(x >> s1))")}
                W[q4 + 1, l] = {word(f"{_U32}(x >> s2)")}
                W[q4 + 2, l] = {word(f"{_U32}((x & m3) << s3)")}
                W[{length_row}, l] = {_U32}((q + slen[k]) * 8)
                W[{zero_row}, l] = {_U32}(0)
            {compress}(W, H)
{check}{ret}
'''


def generate() -> str:
    parts = [
        '"""Lane-parallel SHA-1 / MD5 kernels.  Generated by ``_kernelgen.py``; do not edit."""',
        "",
        "import numba as nb",
        "import numpy as np",
        "",
        f"LANES = {LANES}",
        "",
        "",
        "@nb.njit(nogil=True, cache=True)",
        "def sha1_lanes(W, H):",
        "    for l in range(LANES):",
        _indent(sha1_body(), 8),
        "",
        "",
        "@nb.njit(nogil=True, cache=True)",
        "def md5_lanes(W, H):",
        "    for l in range(LANES):",
        _indent(md5_body(), 8),
        "",
        _scan_source("scan_sha1", "sha1_lanes", md5=False, hist=False),
        _scan_source("scan_md5", "md5_lanes", md5=True, hist=False),
        _scan_source("hist_sha1", "sha1_lanes", md5=False, hist=True),
        _scan_source("hist_md5", "md5_lanes", md5=True, hist=True),
    ]
    text = "\n".join(parts)
    # collapse blank lines left by the optional statements
    while "\n\n\n\n" in text:
        text = text.replace("\n\n\n\n", "\n\n\n")
    return text.rstrip() + "\n"


TARGET = Path(__file__).with_name("_kernels.py")

if __name__ == "__main__":
    TARGET.write_text(generate())
