#pragma once

#include <sodium.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ephshield/error.hpp"

// Hashing and signatures, backed by libsodium. SHA-256 for digests,
// Ed25519 for peer and entry signatures.

namespace ephshield::crypto {

using Digest    = std::array<unsigned char, 32>;
using PublicKey = std::array<unsigned char, 32>;
using SecretKey = std::array<unsigned char, 64>;
using Signature = std::array<unsigned char, 64>;
using Seed      = std::array<unsigned char, 32>;

inline void init() {
    static const int rc = sodium_init();
    if (rc < 0) throw CryptoError("libsodium initialization failed");
}

inline Digest sha256(std::span<const unsigned char> bytes) {
    init();
    Digest out{};
    crypto_hash_sha256(out.data(), bytes.data(), bytes.size());
    return out;
}

inline Digest sha256(const std::string& s) {
    return sha256(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(s.data()), s.size()));
}

struct KeyPair {
    PublicKey public_key{};
    SecretKey secret_key{};
};

inline KeyPair keypair_from_seed(const Seed& seed) {
    init();
    KeyPair kp;
    crypto_sign_seed_keypair(kp.public_key.data(), kp.secret_key.data(), seed.data());
    return kp;
}

inline KeyPair generate_keypair() {
    init();
    KeyPair kp;
    crypto_sign_keypair(kp.public_key.data(), kp.secret_key.data());
    return kp;
}

inline Signature sign(std::span<const unsigned char> msg, const SecretKey& sk) {
    init();
    Signature sig{};
    crypto_sign_detached(sig.data(), nullptr, msg.data(), msg.size(), sk.data());
    return sig;
}

inline bool verify(std::span<const unsigned char> msg, const Signature& sig, const PublicKey& pk) {
    init();
    return crypto_sign_verify_detached(sig.data(), msg.data(), msg.size(), pk.data()) == 0;
}

inline std::string to_hex(std::span<const unsigned char> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

inline int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

inline std::vector<unsigned char> from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw CryptoError("hex string has odd length");
    std::vector<unsigned char> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_nibble(s[2 * i]);
        const int lo = hex_nibble(s[2 * i + 1]);
        if (hi < 0 || lo < 0) throw CryptoError("invalid hex character");
        out[i] = static_cast<unsigned char>(hi << 4 | lo);
    }
    return out;
}

template <std::size_t N>
std::array<unsigned char, N> array_from_hex(const std::string& s) {
    const auto v = from_hex(s);
    if (v.size() != N) throw CryptoError("hex string has wrong length");
    std::array<unsigned char, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
    return out;
}

// Stable derivation of per-peer test/simulation keys from a scenario seed.
inline Seed derive_seed(std::uint64_t scenario_seed, const std::string& tag) {
    std::string material = "ephshield-seed:";
    for (int i = 0; i < 8; ++i)
        material.push_back(static_cast<char>((scenario_seed >> (8 * i)) & 0xff));
    material += tag;
    return sha256(material);
}

} // namespace ephshield::crypto
