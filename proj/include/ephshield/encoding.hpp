#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "ephshield/error.hpp"

// Canonical binary encoding used for hashing, signing and on-disk storage.
// The byte layout is documented field-by-field in docs/formats.md; the rules
// here are the primitives: fixed-width little-endian integers, IEEE-754 bit
// patterns for doubles, and u64 length prefixes for strings/bytes/lists.
// There is exactly one encoding for any value, so digests are reproducible
// on every replica.

namespace ephshield {

class Encoder {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }

    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }

    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        u64(bits);
    }

    void boolean(bool v) { u8(v ? 1 : 0); }

    void bytes(std::span<const unsigned char> b) {
        u64(b.size());
        buf_.insert(buf_.end(), b.begin(), b.end());
    }

    template <std::size_t N>
    void fixed(const std::array<unsigned char, N>& a) {
        buf_.insert(buf_.end(), a.begin(), a.end());
    }

    void str(const std::string& s) {
        u64(s.size());
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    const std::vector<unsigned char>& data() const { return buf_; }
    std::vector<unsigned char> take() { return std::move(buf_); }

private:
    std::vector<unsigned char> buf_;
};

class Decoder {
public:
    explicit Decoder(std::span<const unsigned char> in) : in_(in) {}

    std::uint8_t u8() { return take(1)[0]; }

    std::uint32_t u32() {
        auto p = take(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
        return v;
    }

    std::uint64_t u64() {
        auto p = take(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        return v;
    }

    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

    double f64() {
        const std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof(v));
        return v;
    }

    bool boolean() {
        const std::uint8_t v = u8();
        if (v > 1) throw DecodeError("boolean byte out of range");
        return v == 1;
    }

    std::vector<unsigned char> bytes() {
        const std::uint64_t n = len();
        auto p = take(n);
        return std::vector<unsigned char>(p.begin(), p.end());
    }

    template <std::size_t N>
    std::array<unsigned char, N> fixed() {
        auto p = take(N);
        std::array<unsigned char, N> out{};
        std::memcpy(out.data(), p.data(), N);
        return out;
    }

    std::string str() {
        const std::uint64_t n = len();
        auto p = take(n);
        return std::string(p.begin(), p.end());
    }

    std::uint64_t len() {
        const std::uint64_t n = u64();
        if (n > remaining()) throw DecodeError("length prefix exceeds input");
        return n;
    }

    std::size_t remaining() const { return in_.size() - pos_; }

    void expect_end() const {
        if (pos_ != in_.size()) throw DecodeError("trailing bytes after value");
    }

private:
    std::span<const unsigned char> take(std::size_t n) {
        if (n > remaining()) throw DecodeError("unexpected end of input");
        auto out = in_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::span<const unsigned char> in_;
    std::size_t pos_ = 0;
};

} // namespace ephshield
