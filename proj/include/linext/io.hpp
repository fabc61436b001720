#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linext/errors.hpp"
#include "linext/poset.hpp"

namespace linext {

enum class InstanceKind { Permutation, EdgeList };

inline const char* to_string(InstanceKind k) {
    return k == InstanceKind::Permutation ? "permutation" : "edgelist";
}

// Parsed instance. External files are 1-indexed; everything here is already
// 0-indexed (conversion happens at the parse boundary only).
struct InstanceFile {
    InstanceKind kind = InstanceKind::Permutation;
    Permutation perm;                        // permutation kind
    int n = 0;                               // edge-list kind
    std::vector<std::pair<int, int>> pairs;  // edge-list kind, u < v relations

    Poset to_poset() const {
        return kind == InstanceKind::Permutation ? Poset::from_permutation(perm)
                                                 : Poset::from_pairs(n, pairs);
    }

    int element_count() const { return kind == InstanceKind::Permutation ? perm.size() : n; }

    bool operator==(const InstanceFile&) const = default;
};

namespace detail {

// strips '#' comments, returns whitespace-separated tokens
inline std::vector<std::string> tokenize_instance(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

inline long long parse_int(const std::string& tok) {
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw FormatError("expected an integer, got '" + tok + "'");
    return v;
}

} // namespace detail

inline InstanceFile parse_permutation_file(std::istream& in) {
    auto tokens = detail::tokenize_instance(in);
    int n = static_cast<int>(tokens.size());
    std::vector<int> values;
    values.reserve(tokens.size());
    for (const auto& tok : tokens) {
        long long v = detail::parse_int(tok);
        if (v < 1 || v > n) throw FormatError("permutation entry out of range: " + tok);
        values.push_back(static_cast<int>(v));
    }
    InstanceFile f;
    f.kind = InstanceKind::Permutation;
    try {
        f.perm = Permutation(std::move(values));
    } catch (const InvariantError& e) {
        throw FormatError(e.what());
    }
    return f;
}

inline InstanceFile parse_edge_list_file(std::istream& in) {
    auto tokens = detail::tokenize_instance(in);
    if (tokens.size() < 2) throw FormatError("edge list needs an 'n m' header");
    long long n = detail::parse_int(tokens[0]);
    long long m = detail::parse_int(tokens[1]);
    if (n < 0 || m < 0) throw FormatError("negative count in edge-list header");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw FormatError("edge list token count does not match header");
    InstanceFile f;
    f.kind = InstanceKind::EdgeList;
    f.n = static_cast<int>(n);
    for (long long i = 0; i < m; ++i) {
        long long u = detail::parse_int(tokens[static_cast<std::size_t>(2 + 2 * i)]);
        long long v = detail::parse_int(tokens[static_cast<std::size_t>(3 + 2 * i)]);
        if (u < 1 || u > n || v < 1 || v > n)
            throw FormatError("edge endpoint out of range 1..n");
        f.pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return f;
}

inline InstanceFile parse_instance(std::istream& in, InstanceKind kind) {
    return kind == InstanceKind::Permutation ? parse_permutation_file(in)
                                             : parse_edge_list_file(in);
}

inline void render_instance(std::ostream& out, const InstanceFile& f) {
    if (f.kind == InstanceKind::Permutation) {
        for (int i = 0; i < f.perm.size(); ++i) out << (i ? " " : "") << f.perm.value(i);
        out << "\n";
        return;
    }
    out << f.n << " " << f.pairs.size() << "\n";
    for (auto [u, v] : f.pairs) out << u + 1 << " " << v + 1 << "\n";
}

} // namespace linext
