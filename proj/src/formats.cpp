#include "tanner/formats.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tanner {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::vector<long> next_ints(const char* what) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<long> vals;
            long v;
            while (ls >> v) vals.push_back(v);
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw Error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": non-integer token");
            if (!vals.empty()) return vals;  // skip blank lines
        }
        throw Error(errc::parse_error,
                    std::string("unexpected end of file while reading ") + what);
    }
};

}  // namespace

ScalarParityMatrix parse_alist(const std::string& text) {
    LineReader rd(text);
    auto hdr = rd.next_ints("header");
    if (hdr.size() != 2 || hdr[0] < 1 || hdr[1] < 1)
        throw Error(errc::parse_error, "line 1: expected \"n m\"");
    const int n = static_cast<int>(hdr[0]), m = static_cast<int>(hdr[1]);
    rd.next_ints("max weights");  // informational

    auto cw = rd.next_ints("column weights");
    auto rw = rd.next_ints("row weights");
    if (static_cast<int>(cw.size()) != n)
        throw Error(errc::parse_error, "expected " + std::to_string(n) +
                                           " column weights");
    if (static_cast<int>(rw.size()) != m)
        throw Error(errc::parse_error, "expected " + std::to_string(m) +
                                           " row weights");

    std::vector<std::set<int>> col_supports(n);
    for (int c = 0; c < n; ++c) {
        auto vals = rd.next_ints("column support");
        for (long v : vals) {
            if (v == 0) continue;  // zero padding
            if (v < 1 || v > m)
                throw Error(errc::parse_error,
                            "line " + std::to_string(rd.line_no) +
                                ": row index out of range");
            col_supports[c].insert(static_cast<int>(v - 1));
        }
        if (static_cast<int>(col_supports[c].size()) != cw[c])
            throw Error(errc::parse_error,
                        "line " + std::to_string(rd.line_no) +
                            ": column support does not match its weight");
    }

    std::vector<std::vector<int>> rows(m);
    for (int r = 0; r < m; ++r) {
        auto vals = rd.next_ints("row support");
        for (long v : vals) {
            if (v == 0) continue;
            if (v < 1 || v > n)
                throw Error(errc::parse_error,
                            "line " + std::to_string(rd.line_no) +
                                ": column index out of range");
            rows[r].push_back(static_cast<int>(v - 1));
        }
        if (static_cast<int>(rows[r].size()) != rw[r])
            throw Error(errc::parse_error,
                        "line " + std::to_string(rd.line_no) +
                            ": row support does not match its weight");
    }

    ScalarParityMatrix H(m, n, std::move(rows));
    // the two support lists must describe the same matrix
    std::vector<std::set<int>> from_rows(n);
    for (int r = 0; r < m; ++r)
        for (int c : H.rows[r]) from_rows[c].insert(r);
    if (from_rows != col_supports)
        throw Error(errc::inconsistent_supports,
                    "row and column support lists disagree");
    return H;
}

std::string write_alist(const ScalarParityMatrix& H) {
    auto cw = H.col_weights();
    auto rw = H.row_weights();
    std::vector<std::vector<int>> cols(H.n);
    for (int r = 0; r < H.m; ++r)
        for (int c : H.rows[r]) cols[c].push_back(r);

    std::ostringstream out;
    out << H.n << ' ' << H.m << '\n';
    out << *std::max_element(cw.begin(), cw.end()) << ' '
        << *std::max_element(rw.begin(), rw.end()) << '\n';
    for (int c = 0; c < H.n; ++c) out << cw[c] << (c + 1 < H.n ? ' ' : '\n');
    for (int r = 0; r < H.m; ++r) out << rw[r] << (r + 1 < H.m ? ' ' : '\n');
    for (int c = 0; c < H.n; ++c) {
        for (std::size_t i = 0; i < cols[c].size(); ++i)
            out << cols[c][i] + 1 << (i + 1 < cols[c].size() ? ' ' : '\n');
        if (cols[c].empty()) out << '\n';
    }
    for (int r = 0; r < H.m; ++r) {
        for (std::size_t i = 0; i < H.rows[r].size(); ++i)
            out << H.rows[r][i] + 1 << (i + 1 < H.rows[r].size() ? ' ' : '\n');
        if (H.rows[r].empty()) out << '\n';
    }
    return out.str();
}

PolynomialParityMatrix parse_expmat(const std::string& text,
                                    std::vector<std::string>* warnings,
                                    bool strict) {
    std::istringstream in(text);
    int n_c, n_v, N;
    if (!(in >> n_c >> n_v >> N) || n_c < 1 || n_v < 1 || N < 1)
        throw Error(errc::parse_error, "expmat header: expected \"n_c n_v N\"");

    std::vector<std::vector<std::vector<int>>> entries(
        n_c, std::vector<std::vector<int>>(n_v));
    for (int i = 0; i < n_c; ++i) {
        for (int j = 0; j < n_v; ++j) {
            std::string cell;
            if (!(in >> cell))
                throw Error(errc::parse_error,
                            "expmat: missing cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            if (cell == "-1") continue;  // zero polynomial
            std::set<int> exps;
            std::istringstream cs(cell);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                long e;
                try {
                    std::size_t pos;
                    e = std::stol(tok, &pos);
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw Error(errc::parse_error,
                                "expmat: bad exponent token \"" + tok + "\"");
                }
                if (e < 0 || e >= N) {
                    if (strict)
                        throw Error(errc::exponent_out_of_range,
                                    "exponent " + std::to_string(e) +
                                        " outside [0, N)");
                    long reduced = ((e % N) + N) % N;
                    if (warnings)
                        warnings->push_back(
                            "exponent " + std::to_string(e) + " in cell (" +
                            std::to_string(i) + "," + std::to_string(j) +
                            ") reduced mod " + std::to_string(N) + " to " +
                            std::to_string(reduced));
                    e = reduced;
                }
                if (!exps.insert(static_cast<int>(e)).second && warnings)
                    warnings->push_back("duplicate exponent " +
                                        std::to_string(e) + " in cell (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) +
                                        ") reduced (binary coefficients)");
            }
            if (exps.empty())
                throw Error(errc::parse_error, "expmat: empty cell");
            entries[i][j].assign(exps.begin(), exps.end());
        }
    }
    std::string trailing;
    if (in >> trailing)
        throw Error(errc::parse_error, "expmat: trailing tokens after matrix");
    return {n_c, n_v, N, std::move(entries)};
}

std::string write_expmat(const PolynomialParityMatrix& pm) {
    std::ostringstream out;
    out << pm.n_c << ' ' << pm.n_v << ' ' << pm.N << '\n';
    for (int i = 0; i < pm.n_c; ++i) {
        for (int j = 0; j < pm.n_v; ++j) {
            if (j) out << ' ';
            const auto& cell = pm.entries[i][j];
            if (cell.empty()) {
                out << "-1";
            } else {
                for (std::size_t t = 0; t < cell.size(); ++t)
                    out << (t ? "," : "") << cell[t];
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tanner
