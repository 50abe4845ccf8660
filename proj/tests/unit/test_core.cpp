#include <doctest.h>

#include "mcik/core.hpp"

using namespace mcik;

namespace {
SystemConfig make(int nc, int n, int clusters, int m) {
    SystemConfig c;
    c.n_subcarriers = nc;
    c.cluster_size = n;
    c.n_clusters = clusters;
    c.qam_order = m;
    return c;
}
}  // namespace

TEST_CASE("validate_config accepts the three 128-subcarrier layouts") {
    for (auto [n, clusters] : {std::pair{2, 64}, {4, 32}, {8, 16}}) {
        const auto cfg = make(128, n, clusters, 4);
        CHECK(validate_config(cfg) == cfg);
    }
}

TEST_CASE("validate_config reports every violated rule") {
    try {
        validate_config(make(128, 3, 42, 4));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("dimension mismatch") != std::string::npos);
        CHECK(msg.find("power of two") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_config(make(128, 2, 64, 8)), ConfigError);
    CHECK_THROWS_AS(validate_config(make(128, 2, 64, 32)), ConfigError);
    CHECK_THROWS_AS(validate_config(make(1, 1, 1, 4)), ConfigError);
    CHECK_THROWS_AS(validate_config(make(0, 2, 0, 4)), ConfigError);
    CHECK_THROWS_AS(validate_config(make(128, 4, 31, 4)), ConfigError);
}

TEST_CASE("validate_config is idempotent") {
    const auto once = validate_config(make(64, 8, 8, 16));
    CHECK(validate_config(once) == once);
}

TEST_CASE("bits_per_block") {
    CHECK(bits_per_block(make(128, 2, 64, 4)) == BlockBits{64, 128, 192});
    CHECK(bits_per_block(make(128, 8, 16, 4)) == BlockBits{48, 32, 80});
    CHECK(bits_per_block(make(2, 2, 1, 4)) == BlockBits{1, 2, 3});
    CHECK(bits_per_block(make(128, 4, 32, 256)) == BlockBits{64, 256, 320});
}

TEST_CASE("SNR conversions") {
    CHECK(snr_linear(0.0) == 1.0);
    CHECK(snr_linear(10.0) == doctest::Approx(10.0));
    CHECK(noise_power(20.0) == doctest::Approx(0.01));
    CHECK(noise_power(std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("bit packing helpers") {
    std::uint8_t bits[5];
    uint_to_bits(0b10110, 5, bits);
    CHECK(bits[0] == 1);
    CHECK(bits[1] == 0);
    CHECK(bits[4] == 0);
    CHECK(bits_to_uint(bits, 5) == 0b10110u);
    CHECK(index_mapping_from_string(to_string(IndexMapping::Gray)) == IndexMapping::Gray);
    CHECK_THROWS_AS(index_mapping_from_string("other"), ConfigError);
}
