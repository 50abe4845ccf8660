#include <doctest.h>

#include <set>

#include "mcik/codec.hpp"
#include "mcik/rng.hpp"

using namespace mcik;

namespace {
SystemConfig cfg_of(int n, int clusters, int m) {
    SystemConfig c;
    c.cluster_size = n;
    c.n_clusters = clusters;
    c.n_subcarriers = n * clusters;
    c.qam_order = m;
    return c;
}

BitBuffer random_bits(RngStream& rng, int count) {
    BitBuffer b(count);
    for (auto& v : b) v = rng() & 1u;
    return b;
}
}  // namespace

TEST_CASE("map_index_bits") {
    const std::uint8_t zero[] = {0, 0};
    const std::uint8_t ones[] = {1, 1};
    CHECK(map_index_bits(zero, 4) == 1);
    CHECK(map_index_bits(ones, 4) == 4);

    std::set<int> seen;
    for (unsigned v = 0; v < 8; ++v) {
        std::uint8_t bits[3];
        uint_to_bits(v, 3, bits);
        seen.insert(map_index_bits(bits, 8));
    }
    CHECK(seen.size() == 8);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 8);

    CHECK_THROWS_AS(map_index_bits(zero, 8), ConfigError);
}

TEST_CASE("index_to_binary") {
    CHECK(index_to_binary(1, 2) == BitBuffer{0});
    CHECK(index_to_binary(3, 4) == BitBuffer{1, 0});
    CHECK_THROWS_AS(index_to_binary(0, 4), ConfigError);
    CHECK_THROWS_AS(index_to_binary(5, 4), ConfigError);

    for (auto mapping : {IndexMapping::NaturalBinary, IndexMapping::Gray}) {
        for (int n : {2, 4, 8, 16}) {
            for (int alpha = 1; alpha <= n; ++alpha) {
                const auto bits = index_to_binary(alpha, n, mapping);
                CHECK(map_index_bits(bits, n, mapping) == alpha);
            }
        }
    }
}

TEST_CASE("Gray index mapping makes consecutive positions adjacent") {
    for (int alpha = 1; alpha < 16; ++alpha) CHECK(hamming(alpha, alpha + 1, 16, IndexMapping::Gray) == 1);
}

TEST_CASE("hamming") {
    CHECK(hamming(1, 1, 4) == 0);
    CHECK(hamming(1, 2, 4) == 1);
    CHECK(hamming(1, 4, 4) == 2);
    CHECK_THROWS_AS(hamming(0, 1, 4), ConfigError);

    for (auto mapping : {IndexMapping::NaturalBinary, IndexMapping::Gray}) {
        for (int n : {2, 4, 8, 16}) {
            const int k = ilog2(n);
            for (int a = 1; a <= n; ++a) {
                int row_sum = 0;
                for (int b = 1; b <= n; ++b) {
                    const int h = hamming(a, b, n, mapping);
                    CHECK(h == hamming(b, a, n, mapping));
                    CHECK(h >= 0);
                    CHECK(h <= k);
                    CHECK((h == 0) == (a == b));
                    row_sum += h;
                }
                // Enumerated: every alternative label contributes its distance.
                CHECK(row_sum * 2 == n * k);
            }
        }
    }
}

TEST_CASE("assemble_block single-cluster examples") {
    const auto cfg = cfg_of(2, 1, 4);
    const auto c = build_constellation(4);

    const BitBuffer first = {0, 0, 0};
    const auto b1 = assemble_block(first, cfg, c);
    REQUIRE(b1.samples.size() == 2);
    CHECK(b1.samples[0] != Complex{});
    CHECK(b1.samples[1] == Complex{});
    CHECK(b1.activations[0] == ClusterActivation{1, 1, 1});

    const BitBuffer second = {1, 0, 0};
    const auto b2 = assemble_block(second, cfg, c);
    CHECK(b2.samples[0] == Complex{});
    CHECK(b2.samples[1] == c.point(0));

    CHECK_THROWS_AS(assemble_block(BitBuffer{0, 0}, cfg, c), ConfigError);
}

TEST_CASE("disassemble_block layout") {
    const auto cfg = cfg_of(2, 1, 4);
    const ClusterActivation acts[] = {make_activation(1, 2, 2)};
    const int labels[] = {0};
    CHECK(disassemble_block(acts, labels, cfg) == BitBuffer{1, 0, 0});

    const auto cfg8 = cfg_of(8, 2, 16);
    const ClusterActivation acts8[] = {make_activation(1, 6, 8), make_activation(2, 1, 8)};
    const int labels8[] = {0b1010, 0b0001};
    const auto bits = disassemble_block(acts8, labels8, cfg8);
    // cluster 1: index bits 101 then 1010; cluster 2: 000 then 0001
    CHECK(bits == BitBuffer{1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1});
    for (int pos = 0; pos < 14; ++pos) CHECK(is_index_bit(pos, cfg8) == (pos % 7 < 3));
}

TEST_CASE("block roundtrip and structure at every 128-subcarrier layout") {
    RngStream rng(2024, 0);
    for (auto [n, clusters] : {std::pair{2, 64}, {4, 32}, {8, 16}}) {
        for (int m : {4, 16}) {
            const auto cfg = cfg_of(n, clusters, m);
            const auto c = build_constellation(m);
            const int mt = bits_per_block(cfg).total_bits;
            for (int trial = 0; trial < 10000 / 2; ++trial) {
                const auto bits = random_bits(rng, mt);
                const auto block = assemble_block(bits, cfg, c);
                int nonzero = 0;
                for (int k = 0; k < cfg.n_subcarriers; ++k) nonzero += block.samples[k] != Complex{};
                REQUIRE(nonzero == clusters);
                for (int beta = 1; beta <= clusters; ++beta) {
                    const auto& act = block.activations[beta - 1];
                    REQUIRE(act.cluster_id == beta);
                    REQUIRE(act.global_index == (beta - 1) * n + act.alpha);
                    REQUIRE(block.samples[act.global_index - 1] == c.point(block.payload_symbols[beta - 1]));
                }
                REQUIRE(disassemble_block(block.activations, block.payload_symbols, cfg) == bits);
            }
        }
    }
}
