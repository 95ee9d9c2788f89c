"""Lane-parallel SHA-1 / MD5 kernels.  Generated by ``_kernelgen.py``; do not edit."""

import numba as nb
import numpy as np

LANES = 16


@nb.njit(nogil=True, cache=True)
def sha1_lanes(W, H):
    for l in range(LANES):
        w0 = W[0, l]
        w1 = W[1, l]
        w2 = W[2, l]
        w3 = W[3, l]
        w4 = W[4, l]
        w5 = W[5, l]
        w6 = W[6, l]
        w7 = W[7, l]
        w8 = W[8, l]
        w9 = W[9, l]
        w10 = W[10, l]
        w11 = W[11, l]
        w12 = W[12, l]
        w13 = W[13, l]
        w14 = W[14, l]
        w15 = W[15, l]
        a = np.uint32(0x67452301)
        b = np.uint32(0xEFCDAB89)
        c = np.uint32(0x98BADCFE)
        d = np.uint32(0x10325476)
        e = np.uint32(0xC3D2E1F0)
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (~b & d)) + e + np.uint32(0x5A827999) + w0)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (~a & c)) + d + np.uint32(0x5A827999) + w1)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (~e & b)) + c + np.uint32(0x5A827999) + w2)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (~d & a)) + b + np.uint32(0x5A827999) + w3)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (~c & e)) + a + np.uint32(0x5A827999) + w4)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (~b & d)) + e + np.uint32(0x5A827999) + w5)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (~a & c)) + d + np.uint32(0x5A827999) + w6)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (~e & b)) + c + np.uint32(0x5A827999) + w7)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (~d & a)) + b + np.uint32(0x5A827999) + w8)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (~c & e)) + a + np.uint32(0x5A827999) + w9)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (~b & d)) + e + np.uint32(0x5A827999) + w10)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (~a & c)) + d + np.uint32(0x5A827999) + w11)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (~e & b)) + c + np.uint32(0x5A827999) + w12)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (~d & a)) + b + np.uint32(0x5A827999) + w13)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (~c & e)) + a + np.uint32(0x5A827999) + w14)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (~b & d)) + e + np.uint32(0x5A827999) + w15)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w13 ^ w8 ^ w2 ^ w0
        w0 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (~a & c)) + d + np.uint32(0x5A827999) + w0)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w14 ^ w9 ^ w3 ^ w1
        w1 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (~e & b)) + c + np.uint32(0x5A827999) + w1)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w15 ^ w10 ^ w4 ^ w2
        w2 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (~d & a)) + b + np.uint32(0x5A827999) + w2)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w0 ^ w11 ^ w5 ^ w3
        w3 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (~c & e)) + a + np.uint32(0x5A827999) + w3)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w1 ^ w12 ^ w6 ^ w4
        w4 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0x6ED9EBA1) + w4)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w2 ^ w13 ^ w7 ^ w5
        w5 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0x6ED9EBA1) + w5)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w3 ^ w14 ^ w8 ^ w6
        w6 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0x6ED9EBA1) + w6)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w4 ^ w15 ^ w9 ^ w7
        w7 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0x6ED9EBA1) + w7)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w5 ^ w0 ^ w10 ^ w8
        w8 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0x6ED9EBA1) + w8)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w6 ^ w1 ^ w11 ^ w9
        w9 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0x6ED9EBA1) + w9)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w7 ^ w2 ^ w12 ^ w10
        w10 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0x6ED9EBA1) + w10)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w8 ^ w3 ^ w13 ^ w11
        w11 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0x6ED9EBA1) + w11)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w9 ^ w4 ^ w14 ^ w12
        w12 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0x6ED9EBA1) + w12)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w10 ^ w5 ^ w15 ^ w13
        w13 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0x6ED9EBA1) + w13)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w11 ^ w6 ^ w0 ^ w14
        w14 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0x6ED9EBA1) + w14)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w12 ^ w7 ^ w1 ^ w15
        w15 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0x6ED9EBA1) + w15)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w13 ^ w8 ^ w2 ^ w0
        w0 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0x6ED9EBA1) + w0)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w14 ^ w9 ^ w3 ^ w1
        w1 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0x6ED9EBA1) + w1)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w15 ^ w10 ^ w4 ^ w2
        w2 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0x6ED9EBA1) + w2)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w0 ^ w11 ^ w5 ^ w3
        w3 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0x6ED9EBA1) + w3)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w1 ^ w12 ^ w6 ^ w4
        w4 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0x6ED9EBA1) + w4)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w2 ^ w13 ^ w7 ^ w5
        w5 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0x6ED9EBA1) + w5)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w3 ^ w14 ^ w8 ^ w6
        w6 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0x6ED9EBA1) + w6)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w4 ^ w15 ^ w9 ^ w7
        w7 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0x6ED9EBA1) + w7)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w5 ^ w0 ^ w10 ^ w8
        w8 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (b & d) | (c & d)) + e + np.uint32(0x8F1BBCDC) + w8)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w6 ^ w1 ^ w11 ^ w9
        w9 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (a & c) | (b & c)) + d + np.uint32(0x8F1BBCDC) + w9)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w7 ^ w2 ^ w12 ^ w10
        w10 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (e & b) | (a & b)) + c + np.uint32(0x8F1BBCDC) + w10)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w8 ^ w3 ^ w13 ^ w11
        w11 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (d & a) | (e & a)) + b + np.uint32(0x8F1BBCDC) + w11)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w9 ^ w4 ^ w14 ^ w12
        w12 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (c & e) | (d & e)) + a + np.uint32(0x8F1BBCDC) + w12)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w10 ^ w5 ^ w15 ^ w13
        w13 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (b & d) | (c & d)) + e + np.uint32(0x8F1BBCDC) + w13)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w11 ^ w6 ^ w0 ^ w14
        w14 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (a & c) | (b & c)) + d + np.uint32(0x8F1BBCDC) + w14)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w12 ^ w7 ^ w1 ^ w15
        w15 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (e & b) | (a & b)) + c + np.uint32(0x8F1BBCDC) + w15)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w13 ^ w8 ^ w2 ^ w0
        w0 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (d & a) | (e & a)) + b + np.uint32(0x8F1BBCDC) + w0)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w14 ^ w9 ^ w3 ^ w1
        w1 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (c & e) | (d & e)) + a + np.uint32(0x8F1BBCDC) + w1)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w15 ^ w10 ^ w4 ^ w2
        w2 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (b & d) | (c & d)) + e + np.uint32(0x8F1BBCDC) + w2)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w0 ^ w11 ^ w5 ^ w3
        w3 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (a & c) | (b & c)) + d + np.uint32(0x8F1BBCDC) + w3)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w1 ^ w12 ^ w6 ^ w4
        w4 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (e & b) | (a & b)) + c + np.uint32(0x8F1BBCDC) + w4)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w2 ^ w13 ^ w7 ^ w5
        w5 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (d & a) | (e & a)) + b + np.uint32(0x8F1BBCDC) + w5)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w3 ^ w14 ^ w8 ^ w6
        w6 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (c & e) | (d & e)) + a + np.uint32(0x8F1BBCDC) + w6)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w4 ^ w15 ^ w9 ^ w7
        w7 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + ((b & c) | (b & d) | (c & d)) + e + np.uint32(0x8F1BBCDC) + w7)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w5 ^ w0 ^ w10 ^ w8
        w8 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + ((a & b) | (a & c) | (b & c)) + d + np.uint32(0x8F1BBCDC) + w8)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w6 ^ w1 ^ w11 ^ w9
        w9 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + ((e & a) | (e & b) | (a & b)) + c + np.uint32(0x8F1BBCDC) + w9)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w7 ^ w2 ^ w12 ^ w10
        w10 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + ((d & e) | (d & a) | (e & a)) + b + np.uint32(0x8F1BBCDC) + w10)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w8 ^ w3 ^ w13 ^ w11
        w11 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + ((c & d) | (c & e) | (d & e)) + a + np.uint32(0x8F1BBCDC) + w11)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w9 ^ w4 ^ w14 ^ w12
        w12 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0xCA62C1D6) + w12)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w10 ^ w5 ^ w15 ^ w13
        w13 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0xCA62C1D6) + w13)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w11 ^ w6 ^ w0 ^ w14
        w14 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0xCA62C1D6) + w14)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w12 ^ w7 ^ w1 ^ w15
        w15 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0xCA62C1D6) + w15)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w13 ^ w8 ^ w2 ^ w0
        w0 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0xCA62C1D6) + w0)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w14 ^ w9 ^ w3 ^ w1
        w1 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0xCA62C1D6) + w1)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w15 ^ w10 ^ w4 ^ w2
        w2 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0xCA62C1D6) + w2)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w0 ^ w11 ^ w5 ^ w3
        w3 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0xCA62C1D6) + w3)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w1 ^ w12 ^ w6 ^ w4
        w4 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0xCA62C1D6) + w4)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w2 ^ w13 ^ w7 ^ w5
        w5 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0xCA62C1D6) + w5)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w3 ^ w14 ^ w8 ^ w6
        w6 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0xCA62C1D6) + w6)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w4 ^ w15 ^ w9 ^ w7
        w7 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0xCA62C1D6) + w7)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w5 ^ w0 ^ w10 ^ w8
        w8 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0xCA62C1D6) + w8)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w6 ^ w1 ^ w11 ^ w9
        w9 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0xCA62C1D6) + w9)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w7 ^ w2 ^ w12 ^ w10
        w10 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0xCA62C1D6) + w10)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        x = w8 ^ w3 ^ w13 ^ w11
        w11 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        e = np.uint32(((a << np.uint32(5)) | (a >> np.uint32(27))) + (b ^ c ^ d) + e + np.uint32(0xCA62C1D6) + w11)
        b = np.uint32(((b << np.uint32(30)) | (b >> np.uint32(2))))
        x = w9 ^ w4 ^ w14 ^ w12
        w12 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        d = np.uint32(((e << np.uint32(5)) | (e >> np.uint32(27))) + (a ^ b ^ c) + d + np.uint32(0xCA62C1D6) + w12)
        a = np.uint32(((a << np.uint32(30)) | (a >> np.uint32(2))))
        x = w10 ^ w5 ^ w15 ^ w13
        w13 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        c = np.uint32(((d << np.uint32(5)) | (d >> np.uint32(27))) + (e ^ a ^ b) + c + np.uint32(0xCA62C1D6) + w13)
        e = np.uint32(((e << np.uint32(30)) | (e >> np.uint32(2))))
        x = w11 ^ w6 ^ w0 ^ w14
        w14 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        b = np.uint32(((c << np.uint32(5)) | (c >> np.uint32(27))) + (d ^ e ^ a) + b + np.uint32(0xCA62C1D6) + w14)
        d = np.uint32(((d << np.uint32(30)) | (d >> np.uint32(2))))
        x = w12 ^ w7 ^ w1 ^ w15
        w15 = np.uint32(((x << np.uint32(1)) | (x >> np.uint32(31))))
        a = np.uint32(((b << np.uint32(5)) | (b >> np.uint32(27))) + (c ^ d ^ e) + a + np.uint32(0xCA62C1D6) + w15)
        c = np.uint32(((c << np.uint32(30)) | (c >> np.uint32(2))))
        H[0, l] = np.uint32(np.uint32(0x67452301) + a)
        H[1, l] = np.uint32(np.uint32(0xEFCDAB89) + b)
        H[2, l] = np.uint32(np.uint32(0x98BADCFE) + c)
        H[3, l] = np.uint32(np.uint32(0x10325476) + d)
        H[4, l] = np.uint32(np.uint32(0xC3D2E1F0) + e)


@nb.njit(nogil=True, cache=True)
def md5_lanes(W, H):
    for l in range(LANES):
        w0 = W[0, l]
        w1 = W[1, l]
        w2 = W[2, l]
        w3 = W[3, l]
        w4 = W[4, l]
        w5 = W[5, l]
        w6 = W[6, l]
        w7 = W[7, l]
        w8 = W[8, l]
        w9 = W[9, l]
        w10 = W[10, l]
        w11 = W[11, l]
        w12 = W[12, l]
        w13 = W[13, l]
        w14 = W[14, l]
        w15 = W[15, l]
        a = np.uint32(0x67452301)
        b = np.uint32(0xEFCDAB89)
        c = np.uint32(0x98BADCFE)
        d = np.uint32(0x10325476)
        x = np.uint32(a + ((b & c) | (~b & d)) + np.uint32(0xd76aa478) + w0)
        a = np.uint32(b + ((x << np.uint32(7)) | (x >> np.uint32(25))))
        x = np.uint32(d + ((a & b) | (~a & c)) + np.uint32(0xe8c7b756) + w1)
        d = np.uint32(a + ((x << np.uint32(12)) | (x >> np.uint32(20))))
        x = np.uint32(c + ((d & a) | (~d & b)) + np.uint32(0x242070db) + w2)
        c = np.uint32(d + ((x << np.uint32(17)) | (x >> np.uint32(15))))
        x = np.uint32(b + ((c & d) | (~c & a)) + np.uint32(0xc1bdceee) + w3)
        b = np.uint32(c + ((x << np.uint32(22)) | (x >> np.uint32(10))))
        x = np.uint32(a + ((b & c) | (~b & d)) + np.uint32(0xf57c0faf) + w4)
        a = np.uint32(b + ((x << np.uint32(7)) | (x >> np.uint32(25))))
        x = np.uint32(d + ((a & b) | (~a & c)) + np.uint32(0x4787c62a) + w5)
        d = np.uint32(a + ((x << np.uint32(12)) | (x >> np.uint32(20))))
        x = np.uint32(c + ((d & a) | (~d & b)) + np.uint32(0xa8304613) + w6)
        c = np.uint32(d + ((x << np.uint32(17)) | (x >> np.uint32(15))))
        x = np.uint32(b + ((c & d) | (~c & a)) + np.uint32(0xfd469501) + w7)
        b = np.uint32(c + ((x << np.uint32(22)) | (x >> np.uint32(10))))
        x = np.uint32(a + ((b & c) | (~b & d)) + np.uint32(0x698098d8) + w8)
        a = np.uint32(b + ((x << np.uint32(7)) | (x >> np.uint32(25))))
        x = np.uint32(d + ((a & b) | (~a & c)) + np.uint32(0x8b44f7af) + w9)
        d = np.uint32(a + ((x << np.uint32(12)) | (x >> np.uint32(20))))
        x = np.uint32(c + ((d & a) | (~d & b)) + np.uint32(0xffff5bb1) + w10)
        c = np.uint32(d + ((x << np.uint32(17)) | (x >> np.uint32(15))))
        x = np.uint32(b + ((c & d) | (~c & a)) + np.uint32(0x895cd7be) + w11)
        b = np.uint32(c + ((x << np.uint32(22)) | (x >> np.uint32(10))))
        x = np.uint32(a + ((b & c) | (~b & d)) + np.uint32(0x6b901122) + w12)
        a = np.uint32(b + ((x << np.uint32(7)) | (x >> np.uint32(25))))
        x = np.uint32(d + ((a & b) | (~a & c)) + np.uint32(0xfd987193) + w13)
        d = np.uint32(a + ((x << np.uint32(12)) | (x >> np.uint32(20))))
        x = np.uint32(c + ((d & a) | (~d & b)) + np.uint32(0xa679438e) + w14)
        c = np.uint32(d + ((x << np.uint32(17)) | (x >> np.uint32(15))))
        x = np.uint32(b + ((c & d) | (~c & a)) + np.uint32(0x49b40821) + w15)
        b = np.uint32(c + ((x << np.uint32(22)) | (x >> np.uint32(10))))
        x = np.uint32(a + ((d & b) | (~d & c)) + np.uint32(0xf61e2562) + w1)
        a = np.uint32(b + ((x << np.uint32(5)) | (x >> np.uint32(27))))
        x = np.uint32(d + ((c & a) | (~c & b)) + np.uint32(0xc040b340) + w6)
        d = np.uint32(a + ((x << np.uint32(9)) | (x >> np.uint32(23))))
        x = np.uint32(c + ((b & d) | (~b & a)) + np.uint32(0x265e5a51) + w11)
        c = np.uint32(d + ((x << np.uint32(14)) | (x >> np.uint32(18))))
        x = np.uint32(b + ((a & c) | (~a & d)) + np.uint32(0xe9b6c7aa) + w0)
        b = np.uint32(c + ((x << np.uint32(20)) | (x >> np.uint32(12))))
        x = np.uint32(a + ((d & b) | (~d & c)) + np.uint32(0xd62f105d) + w5)
        a = np.uint32(b + ((x << np.uint32(5)) | (x >> np.uint32(27))))
        x = np.uint32(d + ((c & a) | (~c & b)) + np.uint32(0x2441453) + w10)
        d = np.uint32(a + ((x << np.uint32(9)) | (x >> np.uint32(23))))
        x = np.uint32(c + ((b & d) | (~b & a)) + np.uint32(0xd8a1e681) + w15)
        c = np.uint32(d + ((x << np.uint32(14)) | (x >> np.uint32(18))))
        x = np.uint32(b + ((a & c) | (~a & d)) + np.uint32(0xe7d3fbc8) + w4)
        b = np.uint32(c + ((x << np.uint32(20)) | (x >> np.uint32(12))))
        x = np.uint32(a + ((d & b) | (~d & c)) + np.uint32(0x21e1cde6) + w9)
        a = np.uint32(b + ((x << np.uint32(5)) | (x >> np.uint32(27))))
        x = np.uint32(d + ((c & a) | (~c & b)) + np.uint32(0xc33707d6) + w14)
        d = np.uint32(a + ((x << np.uint32(9)) | (x >> np.uint32(23))))
        x = np.uint32(c + ((b & d) | (~b & a)) + np.uint32(0xf4d50d87) + w3)
        c = np.uint32(d + ((x << np.uint32(14)) | (x >> np.uint32(18))))
        x = np.uint32(b + ((a & c) | (~a & d)) + np.uint32(0x455a14ed) + w8)
        b = np.uint32(c + ((x << np.uint32(20)) | (x >> np.uint32(12))))
        x = np.uint32(a + ((d & b) | (~d & c)) + np.uint32(0xa9e3e905) + w13)
        a = np.uint32(b + ((x << np.uint32(5)) | (x >> np.uint32(27))))
        x = np.uint32(d + ((c & a) | (~c & b)) + np.uint32(0xfcefa3f8) + w2)
        d = np.uint32(a + ((x << np.uint32(9)) | (x >> np.uint32(23))))
        x = np.uint32(c + ((b & d) | (~b & a)) + np.uint32(0x676f02d9) + w7)
        c = np.uint32(d + ((x << np.uint32(14)) | (x >> np.uint32(18))))
        x = np.uint32(b + ((a & c) | (~a & d)) + np.uint32(0x8d2a4c8a) + w12)
        b = np.uint32(c + ((x << np.uint32(20)) | (x >> np.uint32(12))))
        x = np.uint32(a + (b ^ c ^ d) + np.uint32(0xfffa3942) + w5)
        a = np.uint32(b + ((x << np.uint32(4)) | (x >> np.uint32(28))))
        x = np.uint32(d + (a ^ b ^ c) + np.uint32(0x8771f681) + w8)
        d = np.uint32(a + ((x << np.uint32(11)) | (x >> np.uint32(21))))
        x = np.uint32(c + (d ^ a ^ b) + np.uint32(0x6d9d6122) + w11)
        c = np.uint32(d + ((x << np.uint32(16)) | (x >> np.uint32(16))))
        x = np.uint32(b + (c ^ d ^ a) + np.uint32(0xfde5380c) + w14)
        b = np.uint32(c + ((x << np.uint32(23)) | (x >> np.uint32(9))))
        x = np.uint32(a + (b ^ c ^ d) + np.uint32(0xa4beea44) + w1)
        a = np.uint32(b + ((x << np.uint32(4)) | (x >> np.uint32(28))))
        x = np.uint32(d + (a ^ b ^ c) + np.uint32(0x4bdecfa9) + w4)
        d = np.uint32(a + ((x << np.uint32(11)) | (x >> np.uint32(21))))
        x = np.uint32(c + (d ^ a ^ b) + np.uint32(0xf6bb4b60) + w7)
        c = np.uint32(d + ((x << np.uint32(16)) | (x >> np.uint32(16))))
        x = np.uint32(b + (c ^ d ^ a) + np.uint32(0xbebfbc70) + w10)
        b = np.uint32(c + ((x << np.uint32(23)) | (x >> np.uint32(9))))
        x = np.uint32(a + (b ^ c ^ d) + np.uint32(0x289b7ec6) + w13)
        a = np.uint32(b + ((x << np.uint32(4)) | (x >> np.uint32(28))))
        x = np.uint32(d + (a ^ b ^ c) + np.uint32(0xeaa127fa) + w0)
        d = np.uint32(a + ((x << np.uint32(11)) | (x >> np.uint32(21))))
        x = np.uint32(c + (d ^ a ^ b) + np.uint32(0xd4ef3085) + w3)
        c = np.uint32(d + ((x << np.uint32(16)) | (x >> np.uint32(16))))
        x = np.uint32(b + (c ^ d ^ a) + np.uint32(0x4881d05) + w6)
        b = np.uint32(c + ((x << np.uint32(23)) | (x >> np.uint32(9))))
        x = np.uint32(a + (b ^ c ^ d) + np.uint32(0xd9d4d039) + w9)
        a = np.uint32(b + ((x << np.uint32(4)) | (x >> np.uint32(28))))
        x = np.uint32(d + (a ^ b ^ c) + np.uint32(0xe6db99e5) + w12)
        d = np.uint32(a + ((x << np.uint32(11)) | (x >> np.uint32(21))))
        x = np.uint32(c + (d ^ a ^ b) + np.uint32(0x1fa27cf8) + w15)
        c = np.uint32(d + ((x << np.uint32(16)) | (x >> np.uint32(16))))
        x = np.uint32(b + (c ^ d ^ a) + np.uint32(0xc4ac5665) + w2)
        b = np.uint32(c + ((x << np.uint32(23)) | (x >> np.uint32(9))))
        x = np.uint32(a + (c ^ (b | ~d)) + np.uint32(0xf4292244) + w0)
        a = np.uint32(b + ((x << np.uint32(6)) | (x >> np.uint32(26))))
        x = np.uint32(d + (b ^ (a | ~c)) + np.uint32(0x432aff97) + w7)
        d = np.uint32(a + ((x << np.uint32(10)) | (x >> np.uint32(22))))
        x = np.uint32(c + (a ^ (d | ~b)) + np.uint32(0xab9423a7) + w14)
        c = np.uint32(d + ((x << np.uint32(15)) | (x >> np.uint32(17))))
        x = np.uint32(b + (d ^ (c | ~a)) + np.uint32(0xfc93a039) + w5)
        b = np.uint32(c + ((x << np.uint32(21)) | (x >> np.uint32(11))))
        x = np.uint32(a + (c ^ (b | ~d)) + np.uint32(0x655b59c3) + w12)
        a = np.uint32(b + ((x << np.uint32(6)) | (x >> np.uint32(26))))
        x = np.uint32(d + (b ^ (a | ~c)) + np.uint32(0x8f0ccc92) + w3)
        d = np.uint32(a + ((x << np.uint32(10)) | (x >> np.uint32(22))))
        x = np.uint32(c + (a ^ (d | ~b)) + np.uint32(0xffeff47d) + w10)
        c = np.uint32(d + ((x << np.uint32(15)) | (x >> np.uint32(17))))
        x = np.uint32(b + (d ^ (c | ~a)) + np.uint32(0x85845dd1) + w1)
        b = np.uint32(c + ((x << np.uint32(21)) | (x >> np.uint32(11))))
        x = np.uint32(a + (c ^ (b | ~d)) + np.uint32(0x6fa87e4f) + w8)
        a = np.uint32(b + ((x << np.uint32(6)) | (x >> np.uint32(26))))
        x = np.uint32(d + (b ^ (a | ~c)) + np.uint32(0xfe2ce6e0) + w15)
        d = np.uint32(a + ((x << np.uint32(10)) | (x >> np.uint32(22))))
        x = np.uint32(c + (a ^ (d | ~b)) + np.uint32(0xa3014314) + w6)
        c = np.uint32(d + ((x << np.uint32(15)) | (x >> np.uint32(17))))
        x = np.uint32(b + (d ^ (c | ~a)) + np.uint32(0x4e0811a1) + w13)
        b = np.uint32(c + ((x << np.uint32(21)) | (x >> np.uint32(11))))
        x = np.uint32(a + (c ^ (b | ~d)) + np.uint32(0xf7537e82) + w4)
        a = np.uint32(b + ((x << np.uint32(6)) | (x >> np.uint32(26))))
        x = np.uint32(d + (b ^ (a | ~c)) + np.uint32(0xbd3af235) + w11)
        d = np.uint32(a + ((x << np.uint32(10)) | (x >> np.uint32(22))))
        x = np.uint32(c + (a ^ (d | ~b)) + np.uint32(0x2ad7d2bb) + w2)
        c = np.uint32(d + ((x << np.uint32(15)) | (x >> np.uint32(17))))
        x = np.uint32(b + (d ^ (c | ~a)) + np.uint32(0xeb86d391) + w9)
        b = np.uint32(c + ((x << np.uint32(21)) | (x >> np.uint32(11))))
        x = np.uint32(np.uint32(0x67452301) + a)
        H[0, l] = np.uint32((((x & np.uint32(0xFF)) << np.uint32(24)) | (((x >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((x >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (x >> np.uint32(24))))
        x = np.uint32(np.uint32(0xEFCDAB89) + b)
        H[1, l] = np.uint32((((x & np.uint32(0xFF)) << np.uint32(24)) | (((x >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((x >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (x >> np.uint32(24))))
        x = np.uint32(np.uint32(0x98BADCFE) + c)
        H[2, l] = np.uint32((((x & np.uint32(0xFF)) << np.uint32(24)) | (((x >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((x >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (x >> np.uint32(24))))
        x = np.uint32(np.uint32(0x10325476) + d)
        H[3, l] = np.uint32((((x & np.uint32(0xFF)) << np.uint32(24)) | (((x >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((x >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (x >> np.uint32(24))))


@nb.njit(nogil=True, cache=True)
def scan_sha1(pw, qs, bases, lo, hi, tail, slen, tables, wis, shs, umask, out_pos, out_bucket, out_addr):
    W = np.zeros((16, LANES), np.uint32)
    H = np.zeros((6, LANES), np.uint32)
    cnt = 0
    npos = tables.shape[0]
    cap = out_addr.size
    for o in range(qs.size):
        q = qs[o]
        base = np.int64(bases[o])
        q4 = q // 4
        r = q % 4
        s1 = np.uint64(32 + 8 * r)
        s2 = np.uint64(8 * r)
        s3 = np.uint64(32 - 8 * r)
        m3 = (np.uint64(1) << np.uint64(8 * r)) - np.uint64(1)
        for j in range(16):
            for l in range(LANES):
                W[j, l] = pw[o, j]
        c0 = pw[o, q4]
        for i0 in range(lo, hi, LANES):
            for l in range(LANES):
                k = min(i0 + l, hi - 1)
                x = tail[k]
                W[q4, l] = np.uint32(c0 | np.uint32(x >> s1))
                W[q4 + 1, l] = np.uint32(x >> s2)
                W[q4 + 2, l] = np.uint32((x & m3) << s3)
                W[15, l] = np.uint32((q + slen[k]) * 8)
                W[14, l] = np.uint32(0)
            sha1_lanes(W, H)
            for p in range(npos):
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
    return cnt


@nb.njit(nogil=True, cache=True)
def scan_md5(pw, qs, bases, lo, hi, tail, slen, tables, wis, shs, umask, out_pos, out_bucket, out_addr):
    W = np.zeros((16, LANES), np.uint32)
    H = np.zeros((6, LANES), np.uint32)
    cnt = 0
    npos = tables.shape[0]
    cap = out_addr.size
    for o in range(qs.size):
        q = qs[o]
        base = np.int64(bases[o])
        q4 = q // 4
        r = q % 4
        s1 = np.uint64(32 + 8 * r)
        s2 = np.uint64(8 * r)
        s3 = np.uint64(32 - 8 * r)
        m3 = (np.uint64(1) << np.uint64(8 * r)) - np.uint64(1)
        for j in range(16):
            for l in range(LANES):
                W[j, l] = (((pw[o, j] & np.uint32(0xFF)) << np.uint32(24)) | (((pw[o, j] >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((pw[o, j] >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (pw[o, j] >> np.uint32(24)))
        c0 = pw[o, q4]
        for i0 in range(lo, hi, LANES):
            for l in range(LANES):
                k = min(i0 + l, hi - 1)
                x = tail[k]
                W[q4, l] = (((np.uint32(c0 | np.uint32(x >> s1)) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(24)))
                W[q4 + 1, l] = (((np.uint32(x >> s2) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32(x >> s2) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32(x >> s2) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32(x >> s2) >> np.uint32(24)))
                W[q4 + 2, l] = (((np.uint32((x & m3) << s3) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32((x & m3) << s3) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32((x & m3) << s3) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32((x & m3) << s3) >> np.uint32(24)))
                W[14, l] = np.uint32((q + slen[k]) * 8)
                W[15, l] = np.uint32(0)
            md5_lanes(W, H)
            for p in range(npos):
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
    return cnt


@nb.njit(nogil=True, cache=True)
def hist_sha1(pw, qs, bases, lo, hi, tail, slen, wi, sh, umask, hist):
    W = np.zeros((16, LANES), np.uint32)
    H = np.zeros((6, LANES), np.uint32)
    for o in range(qs.size):
        q = qs[o]
        q4 = q // 4
        r = q % 4
        s1 = np.uint64(32 + 8 * r)
        s2 = np.uint64(8 * r)
        s3 = np.uint64(32 - 8 * r)
        m3 = (np.uint64(1) << np.uint64(8 * r)) - np.uint64(1)
        for j in range(16):
            for l in range(LANES):
                W[j, l] = pw[o, j]
        c0 = pw[o, q4]
        for i0 in range(lo, hi, LANES):
            for l in range(LANES):
                k = min(i0 + l, hi - 1)
                x = tail[k]
                W[q4, l] = np.uint32(c0 | np.uint32(x >> s1))
                W[q4 + 1, l] = np.uint32(x >> s2)
                W[q4 + 2, l] = np.uint32((x & m3) << s3)
                W[15, l] = np.uint32((q + slen[k]) * 8)
                W[14, l] = np.uint32(0)
            sha1_lanes(W, H)
            for l in range(LANES):
                if i0 + l < hi:
                    x = (np.uint64(H[wi, l]) << np.uint64(32)) | np.uint64(H[wi + 1, l])
                    hist[(x >> sh) & umask] += 1
    return 0


@nb.njit(nogil=True, cache=True)
def hist_md5(pw, qs, bases, lo, hi, tail, slen, wi, sh, umask, hist):
    W = np.zeros((16, LANES), np.uint32)
    H = np.zeros((6, LANES), np.uint32)
    for o in range(qs.size):
        q = qs[o]
        q4 = q // 4
        r = q % 4
        s1 = np.uint64(32 + 8 * r)
        s2 = np.uint64(8 * r)
        s3 = np.uint64(32 - 8 * r)
        m3 = (np.uint64(1) << np.uint64(8 * r)) - np.uint64(1)
        for j in range(16):
            for l in range(LANES):
                W[j, l] = (((pw[o, j] & np.uint32(0xFF)) << np.uint32(24)) | (((pw[o, j] >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((pw[o, j] >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (pw[o, j] >> np.uint32(24)))
        c0 = pw[o, q4]
        for i0 in range(lo, hi, LANES):
            for l in range(LANES):
                k = min(i0 + l, hi - 1)
                x = tail[k]
                W[q4, l] = (((np.uint32(c0 | np.uint32(x >> s1)) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32(c0 | np.uint32(x >> s1)) >> np.uint32(24)))
                W[q4 + 1, l] = (((np.uint32(x >> s2) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32(x >> s2) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32(x >> s2) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32(x >> s2) >> np.uint32(24)))
                W[q4 + 2, l] = (((np.uint32((x & m3) << s3) & np.uint32(0xFF)) << np.uint32(24)) | (((np.uint32((x & m3) << s3) >> np.uint32(8)) & np.uint32(0xFF)) << np.uint32(16)) | (((np.uint32((x & m3) << s3) >> np.uint32(16)) & np.uint32(0xFF)) << np.uint32(8)) | (np.uint32((x & m3) << s3) >> np.uint32(24)))
                W[14, l] = np.uint32((q + slen[k]) * 8)
                W[15, l] = np.uint32(0)
            md5_lanes(W, H)
            for l in range(LANES):
                if i0 + l < hi:
                    x = (np.uint64(H[wi, l]) << np.uint64(32)) | np.uint64(H[wi + 1, l])
                    hist[(x >> sh) & umask] += 1
    return 0
