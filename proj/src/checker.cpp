#include "checker.hpp"

#include <numeric>

namespace qvc {

void CheckOutcome::record(const std::string& name, bool ok, const std::string& why) {
    checks.emplace_back(name, ok);
    if (!ok && accepted) {
        accepted = false;
        detail = why.empty() ? name + " failed" : name + ": " + why;
    }
}

namespace {

// Self-contained integer matrix helpers; nothing here calls into linalg.
using Vec = std::vector<Int>;
using Mtx = std::vector<Vec>;

bool decimal_string(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Int parse_int(const ojson& v, const std::string& what) {
    if (!v.is_string() || !decimal_string(v.get<std::string>()))
        throw InputError(what + " must be a decimal string");
    return Int(v.get<std::string>());
}

Vec parse_vec(const ojson& v, const std::string& what) {
    if (!v.is_array()) throw InputError(what + " must be an array");
    Vec out;
    for (const auto& x : v) out.push_back(parse_int(x, what + " entry"));
    return out;
}

Mtx parse_mtx(const ojson& v, const std::string& what) {
    if (!v.is_array()) throw InputError(what + " must be an array of rows");
    Mtx out;
    for (const auto& row : v) out.push_back(parse_vec(row, what + " row"));
    for (const Vec& row : out)
        if (row.size() != out[0].size()) throw InputError(what + " rows have unequal lengths");
    return out;
}

int cols_of(const Mtx& m) { return m.empty() ? 0 : int(m[0].size()); }

Mtx transpose(const Mtx& m) {
    Mtx t(size_t(cols_of(m)), Vec(m.size(), Int(0)));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
    return t;
}

Mtx mul(const Mtx& a, const Mtx& b) {
    size_t n = a.size(), k = b.size(), m = size_t(cols_of(b));
    Mtx out(n, Vec(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

Int bilinear(const Vec& v, const Mtx& g, const Vec& w) {
    Int acc = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Int row = 0;
        for (size_t j = 0; j < w.size(); ++j) row += g[i][j] * w[j];
        acc += v[i] * row;
    }
    return acc;
}

// Rank by cross-multiplication elimination (no division, no normal forms).
int mtx_rank(Mtx m) {
    int rank = 0;
    size_t rows = m.size(), cols = size_t(cols_of(m));
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Int f = m[i][col], g = m[row][col];
            for (size_t c = col; c < cols; ++c) m[i][c] = m[i][c] * g - m[row][c] * f;
        }
        ++rank;
        ++row;
    }
    return rank;
}

// Determinant by cofactor expansion along the first row; the matrices here
// are at most quiver-sized.
Int mtx_det(const Mtx& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Mtx sub;
        sub.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            Vec row;
            row.reserve(n - 1);
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        Int term = m[0][c] * mtx_det(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

// The rows span a saturated lattice iff the gcd of all maximal minors is 1
// (given full row rank). Rank 0 is trivially saturated.
bool rows_saturated(const Mtx& basis) {
    size_t r = basis.size();
    if (r == 0) return true;
    size_t n = size_t(cols_of(basis));
    if (r > n) return false;
    std::vector<size_t> pick(r);
    for (size_t i = 0; i < r; ++i) pick[i] = i;
    Int g = 0;
    while (true) {
        Mtx sub(r, Vec(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) sub[i][j] = basis[i][pick[j]];
        Int d = mtx_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (g == 1) return true;
        // next combination
        size_t k = r;
        while (k > 0 && pick[k - 1] == n - r + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (size_t i = k; i < r; ++i) pick[i] = pick[i - 1] + 1;
    }
    return g == 1;
}

bool mtx_equal(const Mtx& a, const Mtx& b) { return a == b; }

bool symmetrization_zero(const Mtx& r) {
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j)
            if (r[i][j] + r[j][i] != 0) return false;
    return true;
}

constexpr long long kReplayCap = 1 << 22;

// Exhaustive residue replay: no c with c^T R c = 1 (mod m).
bool modular_replay(const Mtx& r, long m) {
    size_t rk = r.size();
    if (m < 2 || m >= kReplayCap) return false;
    long long total = 1;
    for (size_t i = 0; i < rk; ++i) {
        total *= m;
        if (total > kReplayCap) return false;
    }
    Vec c(rk, Int(0));
    while (true) {
        Int q = bilinear(c, r, c) % m;
        if (q < 0) q += m;
        if (q == 1 % m) return false;
        size_t k = rk;
        while (k > 0 && c[k - 1] == m - 1) c[--k] = 0;
        if (k == 0) break;
        ++c[k - 1];
    }
    return true;
}

// Box replay: no coefficient vector with |c_i| <= bound has c^T R c = 1.
bool box_replay(const Mtx& r, long bound, bool* feasible) {
    size_t rk = r.size();
    *feasible = true;
    if (rk == 0) return true;
    if (bound >= kReplayCap) {
        *feasible = false;
        return false;
    }
    long long total = 1;
    for (size_t i = 0; i < rk; ++i) {
        total *= 2 * bound + 1;
        if (total > kReplayCap) {
            *feasible = false;
            return false;
        }
    }
    Vec c(rk, Int(-bound));
    while (true) {
        if (bilinear(c, r, c) == 1) return false;
        size_t k = rk;
        while (k > 0 && c[k - 1] == bound) c[--k] = -bound;
        if (k == 0) break;
        ++c[k - 1];
    }
    return true;
}

struct SideData {
    std::string side;
    Mtx basis;
    Mtx restricted;
    ojson cert;
    bool certified = false;
    std::optional<Vec> witness;
};

SideData parse_side(const ojson& j) {
    SideData s;
    s.side = j.at("side").get<std::string>();
    if (s.side != "left" && s.side != "right") throw InputError("side must be left or right");
    s.basis = parse_mtx(j.at("lattice_basis"), "lattice basis");
    s.restricted = parse_mtx(j.at("restricted_gram"), "restricted gram");
    if (parse_int(j.at("lattice_rank"), "lattice rank") != Int(int(s.basis.size())))
        throw InputError("lattice rank does not match the basis");
    s.cert = j.at("certificate");
    s.certified = j.at("certified").get<bool>();
    if (!j.at("witness").is_null()) s.witness = parse_vec(j.at("witness"), "witness");
    return s;
}

// Core replay of one side of a nonextendability claim.
void check_side(CheckOutcome& out, const std::string& tag, const SideData& s, const Vec& v, const Mtx& g) {
    size_t n = g.size();
    bool shape_ok = true;
    for (const Vec& row : s.basis) shape_ok = shape_ok && row.size() == n;
    shape_ok = shape_ok && s.restricted.size() == s.basis.size() &&
               (s.basis.empty() || size_t(cols_of(s.restricted)) == s.basis.size());
    out.record(tag + "-shapes", shape_ok);
    if (!shape_ok) return;

    // Every basis row is orthogonal to the class on the examined side.
    bool solves = true;
    for (const Vec& u : s.basis)
        solves = solves && ((s.side == "left" ? bilinear(u, g, v) : bilinear(v, g, u)) == 0);
    out.record(tag + "-basis-orthogonal", solves);

    // The basis has full row rank and spans the whole solution lattice:
    // rank matches the kernel dimension of the constraint and the lattice
    // is saturated (gcd of maximal minors 1), so no integer solution is
    // outside it.
    Mtx constraint(1, Vec(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            constraint[0][i] += (s.side == "left") ? g[i][j] * v[j] : v[j] * g[j][i];
    int expect = int(n) - mtx_rank(constraint);
    out.record(tag + "-basis-rank", mtx_rank(s.basis) == int(s.basis.size()));
    out.record(tag + "-kernel-rank", int(s.basis.size()) == expect,
               "basis rank " + std::to_string(s.basis.size()) + " but kernel has rank " + std::to_string(expect));
    out.record(tag + "-basis-saturated", rows_saturated(s.basis));

    out.record(tag + "-restricted-gram", mtx_equal(mul(mul(s.basis, g), transpose(s.basis)), s.restricted));

    const std::string kind = s.cert.value("kind", "");
    if (kind == "zero_form") {
        out.record(tag + "-zero-form", symmetrization_zero(s.restricted));
        out.record(tag + "-certified-flag", s.certified == !s.witness);
    } else if (kind == "modular") {
        Int m = parse_int(s.cert.at("modulus"), "modulus");
        bool ok = m >= 2 && m.fits_slong_p() && modular_replay(s.restricted, m.get_si());
        out.record(tag + "-modular", ok);
        out.record(tag + "-certified-flag", s.certified == (ok && !s.witness));
    } else if (kind == "box") {
        Int b = parse_int(s.cert.at("bound"), "box bound");
        if (s.witness) {
            // A witness means the side is extendable; replay the witness.
            bool w_ok = bilinear(*s.witness, g, *s.witness) == 1 &&
                        ((s.side == "left" ? bilinear(*s.witness, g, v) : bilinear(v, g, *s.witness)) == 0);
            out.record(tag + "-witness", w_ok);
            out.record(tag + "-certified-flag", !s.certified);
        } else {
            bool feasible = true;
            bool ok = b >= 1 && b.fits_slong_p() && box_replay(s.restricted, b.get_si(), &feasible);
            out.record(tag + "-box-replay", ok, feasible ? "a class inside the box satisfies chi(v,v) = 1"
                                                         : "box too large to replay");
            // Box evidence is never proof strength.
            out.record(tag + "-certified-flag", !s.certified);
        }
    } else {
        out.record(tag + "-certificate-kind", false, "unknown kind '" + kind + "'");
    }
}

struct NonextData {
    Vec cls;
    std::vector<SideData> sides;
    bool verified = false;
    std::string verdict;
};

NonextData parse_nonext(const ojson& j) {
    NonextData d;
    d.cls = parse_vec(j.at("class"), "class");
    for (const auto& s : j.at("sides")) d.sides.push_back(parse_side(s));
    if (d.sides.size() != 2 || d.sides[0].side != "left" || d.sides[1].side != "right")
        throw InputError("expected exactly one left and one right side");
    d.verified = j.at("verified").get<bool>();
    d.verdict = j.at("verdict").get<std::string>();
    return d;
}

void check_nonext(CheckOutcome& out, const std::string& tag, const NonextData& d, const Mtx& g) {
    out.record(tag + "class-exceptional", bilinear(d.cls, g, d.cls) == 1);
    for (const SideData& s : d.sides) check_side(out, tag + s.side, s, d.cls, g);
    bool both_proof = d.sides[0].certified && d.sides[1].certified;
    bool any_witness = d.sides[0].witness || d.sides[1].witness;
    out.record(tag + "verdict-consistent", d.verified == (both_proof && !any_witness) &&
                                               (!d.verified || d.verdict == "numerically nonextendable"));
}

Mtx parse_gram(const ojson& result) {
    Mtx g = parse_mtx(result.at("gram").at("matrix"), "gram matrix");
    if (g.empty() || g.size() != size_t(cols_of(g))) throw InputError("gram matrix must be square");
    return g;
}

void check_nonext_report(CheckOutcome& out, const ojson& result) {
    Mtx g = parse_gram(result);
    NonextData d = parse_nonext(result);
    if (d.cls.size() != g.size()) throw InputError("class length does not match the gram matrix");
    check_nonext(out, "", d, g);
}

void check_jh_report(CheckOutcome& out, const ojson& result) {
    Mtx g = parse_gram(result);
    size_t n = g.size();

    const ojson& full = result.at("full_sequence");
    Mtx seq = parse_mtx(full.at("classes"), "full sequence");
    out.record("full-length", seq.size() == n && parse_int(full.at("length"), "length") == Int(int(n)));
    bool chi_ok = seq.size() == n;
    for (size_t i = 0; chi_ok && i < seq.size(); ++i) chi_ok = bilinear(seq[i], g, seq[i]) == 1;
    for (size_t j = 0; chi_ok && j < seq.size(); ++j)
        for (size_t i = 0; i < j; ++i) chi_ok = chi_ok && bilinear(seq[j], g, seq[i]) == 0;
    out.record("full-exceptional", chi_ok && full.at("exceptional").get<bool>());
    Int det = seq.size() == n ? mtx_det(seq) : Int(0);
    out.record("full-determinant",
               parse_int(full.at("determinant"), "determinant") == det && (det == 1 || det == -1));

    std::vector<NonextData> cands;
    for (const auto& jc : result.at("candidates")) {
        if (jc.at("nonext").is_null()) continue;
        NonextData d = parse_nonext(jc.at("nonext"));
        check_nonext(out, "candidate-", d, g);
        cands.push_back(std::move(d));
    }

    const ojson& viol = result.at("violation");
    bool witnessed = viol.at("witnessed").get<bool>();
    if (!witnessed) {
        out.record("no-violation-claim", true);
        return;
    }
    Vec winner = parse_vec(viol.at("winner_class"), "winner class");
    bool winner_ok = false;
    for (const NonextData& d : cands) winner_ok = winner_ok || (d.cls == winner && d.verified);
    out.record("winner-verified", winner_ok, "winner class is not a verified candidate");

    const ojson& shortseq = viol.at("short_sequence");
    Mtx sseq = parse_mtx(shortseq.at("classes"), "short sequence");
    out.record("short-sequence", sseq.size() == 1 && sseq[0] == winner &&
                                     parse_int(shortseq.at("length"), "length") == 1);

    const ojson& rem = viol.at("remainder");
    Mtx basis = parse_mtx(rem.at("basis"), "remainder basis");
    Mtx restricted = parse_mtx(rem.at("restricted_gram"), "remainder restricted gram");
    out.record("remainder-rank-field", parse_int(rem.at("rank"), "rank") == Int(int(basis.size())));
    bool ortho = true;
    for (const Vec& u : basis)
        ortho = ortho && bilinear(u, g, winner) == 0 && bilinear(winner, g, u) == 0;
    out.record("remainder-bi-orthogonal", ortho);
    out.record("remainder-rank-accounts", basis.size() == n - 1,
               "remainder rank plus one does not account for the whole lattice");
    Mtx constraints(2, Vec(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            constraints[0][i] += g[i][j] * winner[j];
            constraints[1][i] += winner[j] * g[j][i];
        }
    out.record("remainder-kernel-rank", int(basis.size()) == int(n) - mtx_rank(constraints));
    out.record("remainder-basis-rank", mtx_rank(basis) == int(basis.size()));
    out.record("remainder-saturated", rows_saturated(basis));
    out.record("remainder-restricted-gram", mtx_equal(mul(mul(basis, g), transpose(basis)), restricted));

    const ojson& cert = rem.at("certificate");
    const std::string kind = cert.value("kind", "");
    if (kind == "zero_form") {
        out.record("remainder-zero-form", symmetrization_zero(restricted));
    } else if (kind == "modular") {
        Int m = parse_int(cert.at("modulus"), "modulus");
        out.record("remainder-modular", m >= 2 && m.fits_slong_p() && modular_replay(restricted, m.get_si()));
    } else {
        out.record("remainder-proof-strength", false, "violation remainder needs a proof-strength certificate");
    }

    const ojson& lengths = viol.at("lengths");
    out.record("lengths", parse_int(lengths.at("full"), "full length") == Int(int(n)) &&
                              parse_int(lengths.at("short"), "short length") == 1 && n != 1);
}

}  // namespace

CheckOutcome check_report(const ojson& report) {
    if (!report.is_object() || report.value("tool", "") != "quivercert")
        throw InputError("not a quivercert report");
    const std::string command = report.value("command", "");
    if (!report.contains("result")) throw InputError("report has no result");
    CheckOutcome out;
    try {
        if (command == "certify-nonext")
            check_nonext_report(out, report.at("result"));
        else if (command == "certify-jh")
            check_jh_report(out, report.at("result"));
        else
            throw InputError("command '" + command + "' carries no replayable certificate");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    return out;
}

}  // namespace qvc
