#pragma once

#include "torickit/fan.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace torickit {

/// Fan of CP^n: rays e_1, ..., e_n, e_0 = -(e_1 + ... + e_n); every proper
/// subset of the rays spans a cone.
Fan cp_fan(std::size_t n);

/// Fan of the Hirzebruch surface H(k): rays (1,0), (0,1), (-1,k), (0,-1),
/// maximal cones spanned by cyclically adjacent rays.
Fan hirzebruch_fan(long k);

/// Rays e_1, e_2 of R^2 with no two-dimensional cone.
Fan c2_fan();

struct CatalogEntry {
    std::string name;
    Fan fan;
    /// The fixture file's "expected" block, kept as raw JSON text.
    std::string expected_json;
};

/// Loads every *.json fixture in `dir`, sorted by file name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

}  // namespace torickit
