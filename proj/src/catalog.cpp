#include "yber/catalog.hpp"

#include <charconv>
#include <numeric>

#include "yber/derive.hpp"

namespace yber {

PointMap perm_from_cycles(int n, const std::string& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < cycles.size() && (cycles[i] == ' ' || cycles[i] == ',')) i++; };
    skip_ws();
    while (i < cycles.size()) {
        if (cycles[i] != '(') throw ParseError(1, (int)i + 1, "expected '(' in cycle notation");
        i++;
        std::vector<int> cyc;
        bool separated = cycles.find_first_of(" ,", i) < cycles.find(')', i);
        while (i < cycles.size() && cycles[i] != ')') {
            skip_ws();
            if (i >= cycles.size() || cycles[i] == ')') break;
            int value = 0;
            if (separated) {
                auto end = cycles.find_first_of(" ,)", i);
                auto [p, ec] = std::from_chars(cycles.data() + i, cycles.data() + end, value);
                if (ec != std::errc() || p != cycles.data() + end)
                    throw ParseError(1, (int)i + 1, "bad point in cycle");
                i = end;
            } else {
                if (!isdigit((unsigned char)cycles[i]))
                    throw ParseError(1, (int)i + 1, "bad point in cycle");
                value = cycles[i] - '0';
                i++;
            }
            if (value < 1 || value > n)
                throw ParseError(1, (int)i, "cycle point out of range 1..n");
            cyc.push_back(value - 1);
        }
        if (i >= cycles.size()) throw ParseError(1, (int)i, "unterminated cycle");
        i++;  // ')'
        for (size_t j = 0; j < cyc.size(); j++) {
            int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (img[from] != from) throw ParseError(1, (int)i, "cycles are not disjoint");
            img[from] = to;
        }
        skip_ws();
    }
    return PointMap(n, std::move(img));
}

namespace {

FiniteSolution from_point_maps(int n, const std::vector<PointMap>& lambdas,
                               const std::vector<PointMap>& rhos) {
    std::vector<int> lam(n * n), rho(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            lam[a * n + b] = lambdas[a](b);
            rho[a * n + b] = rhos[a](b);
        }
    return FiniteSolution(n, std::move(lam), std::move(rho));
}

FiniteSolution make_flip(int n) {
    std::vector<int> id(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) id[a * n + b] = b;
    return FiniteSolution(n, id, id);
}

FiniteSolution make_ex14() {
    std::vector<PointMap> maps = {PointMap::identity(3), PointMap::identity(3),
                                  perm_from_cycles(3, "(12)")};
    return from_point_maps(3, maps, maps);
}

FiniteSolution make_ex15() {
    PointMap lam = perm_from_cycles(4, "(132)");
    std::vector<PointMap> lambdas(4, lam);
    std::vector<PointMap> rhos = {perm_from_cycles(4, "(13)"), perm_from_cycles(4, "(12)"),
                                  perm_from_cycles(4, "(23)"), perm_from_cycles(4, "(123)")};
    return from_point_maps(4, lambdas, rhos);
}

FiniteSolution make_perm(int n, const std::string& cycles) {
    PointMap f = perm_from_cycles(n, cycles);
    if (!f.is_bijective()) throw PreconditionError("permutation solution needs a bijection");
    PointMap fi = f.inverse();
    std::vector<PointMap> lambdas(n, f), rhos(n, fi);
    return from_point_maps(n, lambdas, rhos);
}

std::optional<int> parse_int(const std::string& s) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    if (name == "ex14")
        return CatalogEntry{name, "n=3 involutive solution, lambda_3 = rho_3 = (12)", make_ex14()};
    if (name == "ex15")
        return CatalogEntry{name, "n=4 invertible solution, lambda_a = (132)", make_ex15()};
    if (name == "ex14-star") {
        auto [ext, k] = star_extension(make_ex14());
        return CatalogEntry{name, "ex14 extended by an absorbing element * = 4", std::move(ext)};
    }
    if (name.starts_with("flip")) {
        auto n = parse_int(name.substr(4));
        if (!n || *n < 1 || *n > 64) return std::nullopt;
        return CatalogEntry{name, "trivial solution (a,b) -> (b,a)", make_flip(*n)};
    }
    if (name.starts_with("perm")) {
        auto colon = name.find(':');
        if (colon == std::string::npos) return std::nullopt;
        auto n = parse_int(name.substr(4, colon - 4));
        if (!n || *n < 1 || *n > 64) return std::nullopt;
        return CatalogEntry{name, "permutation solution (a,b) -> (f(b), f^{-1}(a))",
                            make_perm(*n, name.substr(colon + 1))};
    }
    return std::nullopt;
}

std::vector<CatalogEntry> catalog_standard_entries() {
    std::vector<CatalogEntry> out;
    for (const char* name : {"flip2", "flip3", "ex14", "ex15", "ex14-star",
                             "perm2:(12)", "perm3:(12)", "perm3:(123)"})
        out.push_back(*catalog_lookup(name));
    return out;
}

}  // namespace yber
