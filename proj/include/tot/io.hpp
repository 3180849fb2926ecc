#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tot/tangles.hpp"
#include "tot/tree.hpp"

namespace tot {

// Written at the top of every artifact so reruns can be matched to their inputs.
struct Header {
    std::string command;
    std::uint64_t seed = 0;
    int k = 0;
    std::string family;
};

// Re-indents JSON with one top-level array element per line; key order is kept.
std::string line_format(const std::string& json_text);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// Each member as two sorted vertex arrays, canonical side first.
std::string system_to_json(const GraphSystem& s, const Header& h);

// One row per tangle: for every member (in system order) 0 if the canonical side is chosen.
std::string tangles_to_json(const GraphSystem& s, const TangleSet& ts, const Header& h);
TangleSet tangles_from_json(const GraphSystem& s, const std::string& text);

// pair_of, when given, annotates members with the tangle pair they distinguish efficiently.
std::string nested_to_json(const GraphSystem& s, const NestedSet& n, const Header& h,
                           const std::map<int, std::pair<int, int>>& pair_of = {});
NestedSet nested_from_json(const GraphSystem& s, const std::string& text);

// Stars as lists of oriented separations.
std::string stars_to_json(const GraphSystem& s, const std::vector<std::vector<Id>>& stars, const Header& h);
std::vector<std::vector<Id>> stars_from_json(const GraphSystem& s, const std::string& text);

// td_to_json plus the header fields; td_from_json reads it back.
std::string td_file(const TreeDecomposition& td, const Header& h);

}  // namespace tot
