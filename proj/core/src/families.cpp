#include "dissoc/families.hpp"

#include <charconv>
#include <stdexcept>

namespace dissoc {

namespace {

// (n + a) * 2^e with a possibly negative exponent; the small-n cases of
// the closed forms have e in {-2,-1} and always divide exactly.
Count shifted_term(int n, int a, int e) {
    Count term{static_cast<std::uint64_t>(n + a)};
    if (e >= 0) return term * Count::pow2(e);
    for (int i = 0; i < -e; ++i) term = term.half_exact();
    return term;
}

} // namespace

Graph star_product(int r, const std::vector<int>& parts) {
    if (r < 1) throw std::invalid_argument("star_product: clique order must be >= 1");
    int n = r;
    for (int s : parts) {
        if (s < 1) throw std::invalid_argument("star_product: part sizes must be >= 1");
        n += s;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    int base = r;
    for (int s : parts) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
        edges.emplace_back(0, base); // hub to the lowest label of the part
        base += s;
    }
    return Graph(n, edges);
}

std::vector<Graph> make_F(int n) {
    if (n < 2) throw std::invalid_argument("make_F: order must be >= 2");
    if (n == 6) return {make_standard(StandardKind::path, 6), star_product(2, {2, 2})};
    std::vector<int> parts;
    if (n % 2 == 1) {
        parts.assign(static_cast<std::size_t>((n - 1) / 2), 2);
        return {star_product(1, parts)};
    }
    parts.assign(static_cast<std::size_t>((n - 2) / 2), 2);
    return {star_product(2, parts)};
}

Graph make_U(int n) {
    if (n < 3) throw std::invalid_argument("make_U: order must be >= 3");
    if (n == 6) return star_product(1, {3, 2});
    std::vector<int> parts(static_cast<std::size_t>((n - 3) / 2), 2);
    if (n % 2 == 0) parts.push_back(1);
    return star_product(3, parts);
}

Graph make_T(int n) {
    if (n < 9) throw std::invalid_argument("make_T: order must be >= 9");
    std::vector<int> parts;
    if (n % 2 == 1) {
        parts = {1, 1};
        parts.insert(parts.end(), static_cast<std::size_t>((n - 3) / 2), 2);
    } else {
        parts = {1, 1, 1};
        parts.insert(parts.end(), static_cast<std::size_t>((n - 4) / 2), 2);
    }
    return star_product(1, parts);
}

Count f_closed(int n) {
    if (n < 2) throw std::invalid_argument("f_closed: order must be >= 2");
    if (n % 2 == 1) return Count::pow2(n - 1) + shifted_term(n, 3, (n - 5) / 2);
    return Count::pow2(n - 1) + shifted_term(n, 6, (n - 6) / 2);
}

Count h_closed(int n) {
    if (n < 3) throw std::invalid_argument("h_closed: order must be >= 3");
    if (n == 6) return Count{42};
    if (n % 2 == 1) return Count::pow2(n - 1) + shifted_term(n, 9, (n - 7) / 2);
    return Count::pow2(n - 1) + shifted_term(n, 12, (n - 8) / 2);
}

Graph make_standard(StandardKind kind, int n) {
    switch (kind) {
    case StandardKind::path: {
        if (n < 0) throw std::invalid_argument("path: order must be >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    }
    case StandardKind::cycle: {
        if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, 0);
        return Graph(n, edges);
    }
    case StandardKind::complete: {
        if (n < 0) throw std::invalid_argument("complete: order must be >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph(n, edges);
    }
    case StandardKind::star: {
        // n is the leaf count t; the graph K_{1,t} has order t+1.
        if (n < 0) throw std::invalid_argument("star: leaf count must be >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
        return Graph(n + 1, edges);
    }
    case StandardKind::units:
        throw std::invalid_argument("units needs two parameters; use make_units(s, t)");
    }
    throw std::invalid_argument("make_standard: unknown kind");
}

Graph make_units(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("units: s and t must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) edges.emplace_back(s + 2 * i, s + 2 * i + 1);
    return Graph(s + 2 * t, edges);
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("family spec: bad " + std::string(what) + " '" +
                                    std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

} // namespace

std::vector<Graph> parse_family_spec(std::string_view spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 >= spec.size())
        throw std::invalid_argument("family spec: expected kind:params, got '" + std::string(spec) +
                                    "'");
    std::string_view kind = spec.substr(0, colon);
    std::string_view params = spec.substr(colon + 1);

    if (kind == "path") return {make_standard(StandardKind::path, parse_int(params, "order"))};
    if (kind == "cycle") return {make_standard(StandardKind::cycle, parse_int(params, "order"))};
    if (kind == "complete")
        return {make_standard(StandardKind::complete, parse_int(params, "order"))};
    if (kind == "star") return {make_standard(StandardKind::star, parse_int(params, "leaf count"))};
    if (kind == "F") return make_F(parse_int(params, "order"));
    if (kind == "U") return {make_U(parse_int(params, "order"))};
    if (kind == "T") return {make_T(parse_int(params, "order"))};

    if (kind == "units") {
        int s = -1, t = -1;
        for (std::string_view field : split(params, ',')) {
            if (field.starts_with("s=")) s = parse_int(field.substr(2), "s");
            else if (field.starts_with("t=")) t = parse_int(field.substr(2), "t");
            else throw std::invalid_argument("family spec: units expects s=S,t=T");
        }
        if (s < 0 || t < 0) throw std::invalid_argument("family spec: units expects s=S,t=T");
        return {make_units(s, t)};
    }

    if (kind == "star-product") {
        int r = -1;
        std::vector<int> parts;
        // parts=... consumes the rest of the string, commas included.
        std::size_t parts_at = params.find("parts=");
        std::string_view head = params.substr(0, parts_at);
        for (std::string_view field : split(head, ',')) {
            if (field.empty()) continue;
            if (field.starts_with("r=")) r = parse_int(field.substr(2), "r");
            else throw std::invalid_argument("family spec: star-product expects r=R,parts=...");
        }
        if (parts_at != std::string_view::npos) {
            std::string_view rest = params.substr(parts_at + 6);
            if (!rest.empty())
                for (std::string_view field : split(rest, ','))
                    parts.push_back(parse_int(field, "part size"));
        }
        if (r < 0) throw std::invalid_argument("family spec: star-product expects r=R,parts=...");
        return {star_product(r, parts)};
    }

    throw std::invalid_argument("family spec: unknown kind '" + std::string(kind) + "'");
}

std::string family_spec_grammar() {
    return "path:N | cycle:N | complete:N | star:T | units:s=S,t=T | F:N | U:N | T:N | "
           "star-product:r=R,parts=P1,P2,...";
}

} // namespace dissoc
