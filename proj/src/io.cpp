#include "yber/io.hpp"

#include <charconv>
#include <sstream>

namespace yber {

namespace {

struct LineReader {
    const std::string& text;
    size_t pos = 0;
    int line = 0;

    explicit LineReader(const std::string& t) : text(t) {}

    // Next line without its terminator; throws at end of input.
    std::string next(const char* expectation) {
        if (pos >= text.size())
            throw ParseError(line + 1, 1, std::string("unexpected end of input, expected ") + expectation);
        size_t nl = text.find('\n', pos);
        std::string out = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() : nl + 1;
        line++;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return out;
    }

    bool at_end() {
        while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) pos++;
        return pos >= text.size();
    }

    void expect(const std::string& literal) {
        std::string got = next(("'" + literal + "'").c_str());
        if (got != literal)
            throw ParseError(line, 1, "expected '" + literal + "', got '" + got + "'");
    }

    int expect_n_line() {
        std::string got = next("'n=<int>'");
        if (!got.starts_with("n="))
            throw ParseError(line, 1, "expected 'n=<int>', got '" + got + "'");
        int value = 0;
        auto [p, ec] = std::from_chars(got.data() + 2, got.data() + got.size(), value);
        if (ec != std::errc() || p != got.data() + got.size() || value < 1)
            throw ParseError(line, 3, "bad value for n");
        return value;
    }

    // One row of exactly n 1-based entries, returned 0-based.
    std::vector<int> expect_row(int n) {
        std::string row = next("a row of integers");
        std::vector<int> out;
        size_t i = 0;
        while (i < row.size()) {
            if (row[i] == ' ') {
                i++;
                continue;
            }
            int value = 0;
            auto [p, ec] = std::from_chars(row.data() + i, row.data() + row.size(), value);
            if (ec != std::errc())
                throw ParseError(line, (int)i + 1, "expected an integer");
            if (value < 1 || value > n)
                throw ParseError(line, (int)i + 1, "entry out of range 1..n");
            out.push_back(value - 1);
            i = p - row.data();
        }
        if ((int)out.size() != n)
            throw ParseError(line, (int)row.size() + 1,
                             "expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(out.size()));
        return out;
    }
};

void append_row(std::string& out, std::span<const int> row) {
    for (size_t i = 0; i < row.size(); i++) {
        if (i) out += ' ';
        out += std::to_string(row[i] + 1);
    }
    out += '\n';
}

}  // namespace

FiniteSolution parse_solution(const std::string& text) {
    LineReader in(text);
    in.expect("yber-solution v1");
    int n = in.expect_n_line();
    in.expect("lambda=");
    std::vector<int> lam, rho;
    lam.reserve((size_t)n * n);
    rho.reserve((size_t)n * n);
    for (int a = 0; a < n; a++) {
        auto row = in.expect_row(n);
        lam.insert(lam.end(), row.begin(), row.end());
    }
    in.expect("rho=");
    for (int b = 0; b < n; b++) {
        auto row = in.expect_row(n);
        rho.insert(rho.end(), row.begin(), row.end());
    }
    if (!in.at_end()) throw ParseError(in.line + 1, 1, "trailing content after rho table");
    return FiniteSolution(n, std::move(lam), std::move(rho));
}

std::string format_solution(const FiniteSolution& sol) {
    std::string out = "yber-solution v1\n";
    out += "n=" + std::to_string(sol.size()) + "\n";
    out += "lambda=\n";
    for (int a = 0; a < sol.size(); a++) append_row(out, sol.lambda_row(a));
    out += "rho=\n";
    for (int b = 0; b < sol.size(); b++) append_row(out, sol.rho_row(b));
    return out;
}

PointMap parse_reflection(const std::string& text) {
    LineReader in(text);
    in.expect("yber-reflection v1");
    int n = in.expect_n_line();
    in.expect("k=");
    auto row = in.expect_row(n);
    if (!in.at_end()) throw ParseError(in.line + 1, 1, "trailing content after k row");
    return PointMap(n, std::move(row));
}

std::string format_reflection(const PointMap& k) {
    std::string out = "yber-reflection v1\n";
    out += "n=" + std::to_string(k.size()) + "\n";
    out += "k=\n";
    append_row(out, k.image());
    return out;
}

}  // namespace yber
