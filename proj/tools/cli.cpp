/*
 * Copyright (c) 2026 vvjack contributors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "serialize.hpp"
#include "vvjack/errors.hpp"
#include "vvjack/jack.hpp"

namespace vvjack::cli {
namespace {

using io::Json;

// ---------------------------------------------------------------------------
// input parsing

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& raw) {
    const std::string s = trim(raw);
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + raw + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("not an integer: '" + raw + "'");
    return v;
}

bool plain_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& piece : split(s, ',')) out.push_back(parse_int(piece));
    return out;
}

std::vector<std::vector<int>> parse_grid(const std::string& s) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : split(s, ';')) rows.push_back(parse_int_list(r));
    return rows;
}

Shape parse_shape(const std::string& s) {
    Shape shape = parse_int_list(s);
    validate_shape(shape);
    return shape;
}

Weight parse_weight(const std::string& s, int n) {
    Weight v = parse_int_list(s);
    if (static_cast<int>(v.size()) != n)
        throw ShapeMismatch("weight has " + std::to_string(v.size()) +
                            " entries, the shape has " + std::to_string(n) +
                            " boxes");
    for (int e : v)
        if (e < 0) throw std::invalid_argument("weight entries must be >= 0");
    return v;
}

// Rows "3,1;2" (row 1 first) or an index into the enumeration order.
Tableau tableau_from_text(const Shape& shape, const std::string& s) {
    const ShapeContext& ctx = ShapeContext::get(shape);
    const std::string t = trim(s);
    if (plain_integer(t)) {
        const int k = parse_int(t);
        if (k < 0 || k >= ctx.count())
            throw std::invalid_argument(
                "tableau index " + t + " out of range; the shape has " +
                std::to_string(ctx.count()) + " tableaux");
        return ctx.tableau(k);
    }
    Tableau tau = make_tableau(parse_grid(t));
    if (tau.shape != shape)
        throw ShapeMismatch("tableau rows do not fit the shape");
    return tau;
}

Filling filling_from_text(const Shape& shape, const std::string& s) {
    std::vector<std::vector<int>> rows = parse_grid(trim(s));
    Shape got;
    for (const auto& r : rows) {
        got.push_back(static_cast<int>(r.size()));
        for (int e : r)
            if (e < 0)
                throw std::invalid_argument("filling entries must be >= 0");
    }
    if (got != shape)
        throw ShapeMismatch("filling rows do not fit the shape");
    return Filling{shape, std::move(rows)};
}

BigRat parse_rational(const std::string& raw) {
    const std::string s = trim(raw);
    BigRat q;
    try {
        q = BigRat(s, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + raw + "'");
    }
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + raw + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// output rendering

std::string int_list_text(const std::vector<int>& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << "]";
    return out.str();
}

std::string rows_text(const std::vector<std::vector<int>>& rows) {
    std::ostringstream out;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out << ";";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out << ",";
            out << rows[r][c];
        }
    }
    return out.str();
}

std::string frac_list_text(const std::vector<AlphaFrac>& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].to_string();
    }
    out << "]";
    return out.str();
}

AlphaFrac eval_frac(const AlphaFrac& f, const BigRat& a) {
    return AlphaFrac(f.evaluate_at(a));
}

std::vector<AlphaFrac> eval_fracs(const std::vector<AlphaFrac>& v,
                                  const BigRat& a) {
    std::vector<AlphaFrac> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(eval_frac(f, a));
    return out;
}

VvPoly eval_poly(const VvPoly& p, const BigRat& a) {
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms())
        r.add_term(key.exp, key.tab, eval_frac(c, a));
    return r;
}

struct Emitter {
    std::ostream& out;
    std::string format = "text";
    std::string alpha;  // empty = keep the parameter symbolic

    std::optional<BigRat> alpha_value() const {
        if (alpha.empty()) return std::nullopt;
        return parse_rational(alpha);
    }

    void json(Json j) const { out << j.dump(2) << "\n"; }
};

struct Meta {
    Weight weight;
    Tableau tableau;
    std::vector<AlphaFrac> spectral;
};

void attach_meta(Json& j, const Meta& m) {
    j["weight"] = m.weight;
    j["tableau"] = io::tableau_json(m.tableau);
    j["spectral"] = io::spectral_json(m.spectral);
}

void print_meta(std::ostream& out, const Meta& m) {
    out << "weight:   " << int_list_text(m.weight) << "\n";
    out << "tableau:  " << rows_text(m.tableau.rows) << "\n";
    out << "spectral: " << frac_list_text(m.spectral) << "\n";
}

void emit_poly(const Emitter& em, const VvPoly& poly, Meta meta,
               const std::function<void(Json&)>& extra = nullptr) {
    VvPoly p = poly;
    if (auto a = em.alpha_value()) {
        p = eval_poly(p, *a);
        meta.spectral = eval_fracs(meta.spectral, *a);
    }
    if (em.format == "json") {
        Json j = io::poly_json(p);
        attach_meta(j, meta);
        if (extra) extra(j);
        em.json(std::move(j));
    } else {
        print_meta(em.out, meta);
        em.out << p.to_string() << "\n";
    }
}

// ---------------------------------------------------------------------------
// verification suites

std::vector<Shape> shapes_up_to(int max_n) {
    std::vector<Shape> out;
    for (int n = 2; n <= max_n; ++n) {
        Shape cur;
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p);
                cur.pop_back();
            }
        };
        rec(n, n);
    }
    return out;
}

std::vector<Weight> weights_up_to(int n, int max_deg) {
    std::vector<Weight> out;
    Weight cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(0, max_deg);
    return out;
}

int env_threads() {
    const char* env = std::getenv("VVJACK_THREADS");
    if (env == nullptr) return 1;
    const int t = std::atoi(env);
    return t < 1 ? 1 : t;
}

// Runs task(k) for k in [0, count) on the pool; returns failure messages.
std::vector<std::string> run_pool(
    int count, const std::function<std::optional<std::string>(int)>& task) {
    const int threads = std::min(env_threads(), count > 0 ? count : 1);
    std::vector<std::string> failures;
    if (threads <= 1) {
        for (int k = 0; k < count; ++k)
            if (auto f = task(k)) failures.push_back(*f);
        return failures;
    }
    std::atomic<int> next{0};
    std::mutex sink;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int k = next++; k < count; k = next++) {
                if (auto f = task(k)) {
                    std::lock_guard<std::mutex> lock(sink);
                    failures.push_back(*f);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    std::sort(failures.begin(), failures.end());
    return failures;
}

struct JackCase {
    Shape shape;
    int tab;
    Weight weight;
};

std::vector<JackCase> jack_cases(int max_n, int max_deg) {
    std::vector<JackCase> cases;
    for (const Shape& shape : shapes_up_to(max_n)) {
        const int count = ShapeContext::get(shape).count();
        const int n = shape_size(shape);
        for (const Weight& v : weights_up_to(n, max_deg))
            for (int t = 0; t < count; ++t) cases.push_back({shape, t, v});
    }
    return cases;
}

std::string case_name(const JackCase& c) {
    return "shape " + int_list_text(c.shape) + " T" + std::to_string(c.tab) +
           " weight " + int_list_text(c.weight);
}

Weight random_weight(std::mt19937_64& rng, int n, int max_deg) {
    Weight v(n, 0);
    const int d = static_cast<int>(rng() % (max_deg + 1));
    for (int k = 0; k < d; ++k) ++v[rng() % n];
    return v;
}

int suite_eigen(const Emitter& em, int max_n, int max_deg) {
    const auto cases = jack_cases(max_n, max_deg);
    long checks = 0;
    auto failures = run_pool(
        static_cast<int>(cases.size()), [&](int k) -> std::optional<std::string> {
            const auto& c = cases[k];
            const Tableau& tau = ShapeContext::get(c.shape).tableau(c.tab);
            const VvPoly jack = nonsymmetric_jack(c.weight, tau);
            const auto zeta = spectral_vector(tau, c.weight);
            const int n = shape_size(c.shape);
            for (int i = 1; i <= n; ++i)
                if (xi_tilde(jack, i) != zeta[i - 1] * jack)
                    return "eigen identity failed at " + case_name(c) +
                           " operator " + std::to_string(i);
            const auto lead = leading_monomial(jack);
            if (!lead || lead->weight != c.weight || lead->tab != c.tab ||
                lead->scalar != AlphaFrac(1))
                return "leading monomial failed at " + case_name(c);
            return std::nullopt;
        });
    for (const auto& f : failures) em.out << "FAIL: " << f << "\n";
    checks = static_cast<long>(cases.size());
    em.out << "suite eigen: " << checks << " polynomials checked, "
           << failures.size() << " failures\n";
    return failures.empty() ? 0 : 1;
}

int suite_paths(const Emitter& em, int max_n, int max_deg, uint64_t seed,
                int count) {
    const auto shapes = shapes_up_to(max_n);
    std::mt19937_64 rng(seed);
    struct PathCase {
        Shape shape;
        int tab;
        Weight weight;
        uint64_t path_seed;
    };
    std::vector<PathCase> cases;
    cases.reserve(count);
    for (int k = 0; k < count; ++k) {
        const Shape& shape = shapes[rng() % shapes.size()];
        const int tab =
            static_cast<int>(rng() % ShapeContext::get(shape).count());
        cases.push_back({shape, tab,
                         random_weight(rng, shape_size(shape), max_deg),
                         rng()});
    }
    auto failures = run_pool(count, [&](int k) -> std::optional<std::string> {
        const auto& c = cases[k];
        const Tableau& tau = ShapeContext::get(c.shape).tableau(c.tab);
        const VvPoly a = nonsymmetric_jack(tau, canonical_path(c.weight));
        const VvPoly b =
            nonsymmetric_jack(tau, random_path(c.weight, c.path_seed));
        if (a != b)
            return "path disagreement at shape " + int_list_text(c.shape) +
                   " T" + std::to_string(c.tab) + " weight " +
                   int_list_text(c.weight);
        return std::nullopt;
    });
    for (const auto& f : failures) em.out << "FAIL: " << f << "\n";
    em.out << "suite paths: " << count << " path pairs checked, "
           << failures.size() << " failures\n";
    return failures.empty() ? 0 : 1;
}

int suite_commute(const Emitter& em, int max_n, int max_deg, uint64_t seed,
                  int count) {
    const auto shapes = shapes_up_to(max_n);
    std::mt19937_64 rng(seed);
    std::vector<VvPoly> polys;
    polys.reserve(count);
    for (int k = 0; k < count; ++k) {
        const Shape& shape = shapes[rng() % shapes.size()];
        const int tabs = ShapeContext::get(shape).count();
        const int n = shape_size(shape);
        VvPoly p(shape);
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            const long a = static_cast<long>(rng() % 7) - 3;
            const long b = static_cast<long>(rng() % 7) - 3;
            AlphaFrac c = AlphaFrac::linear(a, b);
            if (c.is_zero()) c = AlphaFrac(1);
            p.add_term(random_weight(rng, n, max_deg),
                       static_cast<int>(rng() % tabs), c);
        }
        if (p.is_zero()) p = VvPoly::unit(shape, 0);
        polys.push_back(std::move(p));
    }
    auto failures = run_pool(count, [&](int k) -> std::optional<std::string> {
        const VvPoly& p = polys[k];
        const int n = p.vars();
        for (int i = 1; i <= n; ++i) {
            const VvPoly ui = cherednik_u(p, i);
            for (int j = i + 1; j <= n; ++j)
                if (cherednik_u(ui, j) != cherednik_u(cherednik_u(p, j), i))
                    return "commutator nonzero on sample " +
                           std::to_string(k) + " pair (" + std::to_string(i) +
                           "," + std::to_string(j) + ")";
        }
        return std::nullopt;
    });
    for (const auto& f : failures) em.out << "FAIL: " << f << "\n";
    em.out << "suite commute: " << count << " polynomials checked, "
           << failures.size() << " failures\n";
    return failures.empty() ? 0 : 1;
}

int suite_norm(const Emitter& em, int max_n, int max_deg) {
    const auto cases = jack_cases(max_n, max_deg);
    auto failures = run_pool(
        static_cast<int>(cases.size()), [&](int k) -> std::optional<std::string> {
            const auto& c = cases[k];
            const Tableau& tau = ShapeContext::get(c.shape).tableau(c.tab);
            const VvPoly jack = nonsymmetric_jack(c.weight, tau);
            if (pairing(jack, jack) != norm_squared(c.weight, tau))
                return "norm mismatch at " + case_name(c);
            return std::nullopt;
        });
    for (const auto& f : failures) em.out << "FAIL: " << f << "\n";
    em.out << "suite norm: " << cases.size() << " polynomials checked, "
           << failures.size() << " failures\n";
    return failures.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"vector-valued Jack polynomials from Yang-Baxter graphs"};
    app.require_subcommand(1);

    Emitter em{out, "text", ""};
    int rc = 0;

    std::string shape_s, tableau_s, weight_s, filling_s;
    std::string tableau2_s, weight2_s;
    int vars = 0;
    bool ratio_flag = false, antisym_flag = false, shifted_flag = false;

    auto add_format = [&](CLI::App* cmd, bool dot = false) {
        std::vector<std::string> allowed = {"json", "text"};
        if (dot) allowed.push_back("dot");
        return cmd->add_option("--format", em.format, "output format")
            ->check(CLI::IsMember(allowed));
    };
    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option(
            "--alpha", em.alpha,
            "evaluate the parameter at this rational (p/q); exits 1 when a "
            "coefficient denominator vanishes there");
    };

    // ---- rst-list ----
    auto* rst = app.add_subcommand(
        "rst-list", "enumerate the reverse standard tableaux of a shape");
    rst->add_option("--shape", shape_s, "partition, e.g. 3,1")->required();
    add_format(rst);
    rst->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const ShapeContext& ctx = ShapeContext::get(shape);
        if (em.format == "json") {
            Json j;
            j["shape"] = shape;
            j["count"] = ctx.count();
            Json list = Json::array();
            for (const auto& tau : ctx.tableaux())
                list.push_back(io::tableau_json(tau));
            j["tableaux"] = std::move(list);
            em.json(std::move(j));
        } else {
            for (int t = 0; t < ctx.count(); ++t)
                out << "T" << t << ": " << rows_text(ctx.tableau(t).rows)
                    << "  CT = " << int_list_text(ctx.contents(t)) << "\n";
        }
    });

    // ---- graph component ----
    auto* graph = app.add_subcommand("graph", "graph inspection");
    graph->require_subcommand(1);
    auto* comp = graph->add_subcommand(
        "component", "finite component attached to a filling");
    comp->add_option("--shape", shape_s, "partition")->required();
    comp->add_option("--filling", filling_s, "grid values, rows as 0,0;1,1")
        ->required();
    auto* comp_fmt = add_format(comp, /*dot=*/true);
    comp->callback([&, comp_fmt] {
        if (comp_fmt->count() == 0) em.format = "json";
        const Shape shape = parse_shape(shape_s);
        const ComponentHT c = component(filling_from_text(shape, filling_s));
        if (em.format == "json") {
            em.json(io::component_json(c));
        } else if (em.format == "dot") {
            out << io::component_dot(c);
        } else {
            out << "filling: " << rows_text(c.filling.rows) << "\n";
            const ShapeContext& ctx = ShapeContext::get(shape);
            for (size_t k = 0; k < c.vertices.size(); ++k) {
                const Vertex& x = c.vertices[k];
                out << "v" << k << ": weight " << int_list_text(x.weight)
                    << "  T" << ctx.index_of(x.tableau) << "  spectral "
                    << frac_list_text(x.spectral) << "\n";
            }
            for (const auto& e : c.edges)
                out << "v" << e.from << " -> v" << e.to << "  "
                    << (e.kind == EdgeKind::Jump ? "jump" : "step") << " "
                    << e.index << "\n";
            out << "root: v" << c.root << "\nsink: v" << c.sink << "\n";
        }
    });

    // ---- jack / shifted ----
    auto add_jack_like = [&](const std::string& name, const std::string& desc,
                             bool shifted) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--shape", shape_s, "partition")->required();
        cmd->add_option("--tableau", tableau_s,
                        "rows (3,1;2) or an enumeration index")
            ->required();
        cmd->add_option("--weight", weight_s, "exponent list")->required();
        add_format(cmd);
        add_alpha(cmd);
        cmd->callback([&, shifted] {
            const Shape shape = parse_shape(shape_s);
            const Tableau tau = tableau_from_text(shape, tableau_s);
            const Weight v = parse_weight(weight_s, shape_size(shape));
            const VvPoly p =
                shifted ? shifted_jack(v, tau) : nonsymmetric_jack(v, tau);
            emit_poly(em, p, Meta{v, tau, spectral_vector(tau, v)});
        });
    };
    add_jack_like("jack", "nonsymmetric Jack polynomial", false);
    add_jack_like("shifted",
                  "shifted (inhomogeneous) Jack polynomial", true);

    // ---- norm ----
    auto* norm = app.add_subcommand(
        "norm", "squared norm of a nonsymmetric Jack polynomial");
    norm->add_option("--shape", shape_s, "partition")->required();
    norm->add_option("--tableau", tableau_s, "rows or index")->required();
    norm->add_option("--weight", weight_s, "exponent list")->required();
    norm->add_flag("--ratio", ratio_flag,
                   "norm relative to the degree-zero member (drops the "
                   "tableau norm factor)");
    add_format(norm);
    add_alpha(norm);
    norm->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const Tableau tau = tableau_from_text(shape, tableau_s);
        const Weight v = parse_weight(weight_s, shape_size(shape));
        AlphaFrac value = ratio_flag ? norm_ratio(v, tau) : norm_squared(v, tau);
        Meta meta{v, tau, spectral_vector(tau, v)};
        if (auto a = em.alpha_value()) {
            value = eval_frac(value, *a);
            meta.spectral = eval_fracs(meta.spectral, *a);
        }
        if (em.format == "json") {
            Json j;
            j["kind"] = ratio_flag ? "ratio" : "squared";
            j["value"] = io::frac_json(value);
            attach_meta(j, meta);
            em.json(std::move(j));
        } else {
            print_meta(out, meta);
            out << (ratio_flag ? "ratio:    " : "norm2:    ")
                << value.to_string() << "\n";
        }
    });

    // ---- sym / antisym ----
    auto add_sym_like = [&](const std::string& name, const std::string& desc,
                            bool anti) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--shape", shape_s, "partition")->required();
        cmd->add_option("--filling", filling_s, "grid values, rows as 1,0;1,0")
            ->required();
        cmd->add_flag("--shifted", shifted_flag,
                      "use the shifted polynomials instead");
        add_format(cmd);
        add_alpha(cmd);
        cmd->callback([&, anti] {
            const Shape shape = parse_shape(shape_s);
            const Filling T = filling_from_text(shape, filling_s);
            VvPoly p;
            if (anti)
                p = shifted_flag ? shifted_antisymmetric_jack(T)
                                 : antisymmetric_jack(T);
            else
                p = shifted_flag ? shifted_symmetric_jack(T)
                                 : symmetric_jack(T);
            const Tableau sink = standardize(T);
            const Weight w = filling_weight(T);
            emit_poly(em, p, Meta{w, sink, spectral_vector(sink, w)},
                      [&](Json& j) { j["filling"] = T.rows; });
        });
    };
    add_sym_like("sym", "symmetric combination over a column-strict filling",
                 false);
    add_sym_like("antisym",
                 "antisymmetric combination over a row-strict filling", true);

    // ---- minimal ----
    auto* minimal = app.add_subcommand(
        "minimal", "minimal-degree symmetric or antisymmetric polynomial");
    minimal->add_option("--shape", shape_s, "partition")->required();
    minimal->add_flag("--antisym", antisym_flag,
                      "antisymmetric family instead of symmetric");
    add_format(minimal);
    add_alpha(minimal);
    minimal->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const MinimalIndex m = antisym_flag ? minimal_antisymmetric(shape)
                                            : minimal_symmetric(shape);
        const VvPoly p = antisym_flag ? antisymmetric_jack(m.filling)
                                      : symmetric_jack(m.filling);
        const Tableau sink = standardize(m.filling);
        emit_poly(em, p, Meta{m.weight, sink, spectral_vector(sink, m.weight)},
                  [&](Json& j) { j["filling"] = m.filling.rows; });
    });

    // ---- restrict ----
    auto* restrict_cmd = app.add_subcommand(
        "restrict", "image of a Jack polynomial under dropping trailing "
                    "variables");
    restrict_cmd->add_option("--shape", shape_s, "partition")->required();
    restrict_cmd->add_option("--tableau", tableau_s, "rows or index")
        ->required();
    restrict_cmd->add_option("--weight", weight_s, "exponent list")
        ->required();
    restrict_cmd->add_option("--vars", vars, "number of surviving variables")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(restrict_cmd);
    add_alpha(restrict_cmd);
    restrict_cmd->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const Tableau tau = tableau_from_text(shape, tableau_s);
        const Weight v = parse_weight(weight_s, shape_size(shape));
        const VvPoly p = restrict_jack(v, tau, vars);
        emit_poly(em, p, Meta{v, tau, spectral_vector(tau, v)});
    });

    // ---- vanish ----
    auto* vanish = app.add_subcommand(
        "vanish", "vanishing points of a shifted Jack polynomial");
    vanish->add_option("--shape", shape_s, "partition")->required();
    vanish->add_option("--tableau", tableau_s, "rows or index")->required();
    vanish->add_option("--weight", weight_s, "exponent list")->required();
    add_format(vanish);
    add_alpha(vanish);
    vanish->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const Tableau tau = tableau_from_text(shape, tableau_s);
        const Weight v = parse_weight(weight_s, shape_size(shape));
        std::vector<VanishingVector> points = propagate_vanishings(v, tau);
        Meta meta{v, tau, spectral_vector(tau, v)};
        if (auto a = em.alpha_value()) {
            meta.spectral = eval_fracs(meta.spectral, *a);
            for (auto& pt : points) pt.entries = eval_fracs(pt.entries, *a);
        }
        if (em.format == "json") {
            Json j;
            Json list = Json::array();
            for (const auto& pt : points)
                list.push_back(io::vanishing_json(pt));
            j["vanishings"] = std::move(list);
            attach_meta(j, meta);
            em.json(std::move(j));
        } else {
            print_meta(out, meta);
            for (const auto& pt : points)
                out << "V = " << frac_list_text(pt.entries) << "  (pivot "
                    << pt.pivot << ")\n";
        }
    });

    // ---- pair ----
    auto* pair_cmd = app.add_subcommand(
        "pair", "contravariant pairing of two Jack polynomials");
    pair_cmd->add_option("--shape", shape_s, "partition")->required();
    pair_cmd->add_option("--tableau", tableau_s, "rows or index")->required();
    pair_cmd->add_option("--weight", weight_s, "exponent list")->required();
    pair_cmd->add_option("--tableau2", tableau2_s,
                         "second tableau (defaults to the first)");
    pair_cmd->add_option("--weight2", weight2_s,
                         "second weight (defaults to the first)");
    add_format(pair_cmd);
    add_alpha(pair_cmd);
    pair_cmd->callback([&] {
        const Shape shape = parse_shape(shape_s);
        const Tableau tau = tableau_from_text(shape, tableau_s);
        const Weight v = parse_weight(weight_s, shape_size(shape));
        const Tableau tau2 = tableau2_s.empty()
                                 ? tau
                                 : tableau_from_text(shape, tableau2_s);
        const Weight v2 = weight2_s.empty()
                              ? v
                              : parse_weight(weight2_s, shape_size(shape));
        AlphaFrac value = pairing(nonsymmetric_jack(v, tau),
                                  nonsymmetric_jack(v2, tau2));
        Meta meta{v, tau, spectral_vector(tau, v)};
        if (auto a = em.alpha_value()) {
            value = eval_frac(value, *a);
            meta.spectral = eval_fracs(meta.spectral, *a);
        }
        if (em.format == "json") {
            Json j;
            j["value"] = io::frac_json(value);
            attach_meta(j, meta);
            j["weight2"] = v2;
            j["tableau2"] = io::tableau_json(tau2);
            em.json(std::move(j));
        } else {
            print_meta(out, meta);
            out << "pairing:  " << value.to_string() << "\n";
        }
    });

    // ---- verify ----
    auto* verify = app.add_subcommand(
        "verify", "run a verification suite over a parameter grid");
    std::string suite = "all";
    int max_n = 4, max_deg = 3, count = 0;
    uint64_t seed = 0;
    verify->add_option("--suite", suite, "eigen, paths, commute, norm or all")
        ->check(CLI::IsMember({"eigen", "paths", "commute", "norm", "all"}));
    verify->add_option("--max-n", max_n, "largest number of boxes")
        ->check(CLI::Range(2, 6));
    verify->add_option("--max-deg", max_deg, "largest weight size")
        ->check(CLI::Range(0, 6));
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--count", count,
                       "sample count for the randomized suites (0 = default)")
        ->check(CLI::Range(0, 100000));
    verify->callback([&] {
        int bad = 0;
        if (suite == "eigen" || suite == "all")
            bad += suite_eigen(em, max_n, max_deg);
        if (suite == "paths" || suite == "all")
            bad += suite_paths(em, max_n, max_deg, seed,
                               count > 0 ? count : 50);
        if (suite == "commute" || suite == "all")
            bad += suite_commute(em, max_n, max_deg, seed,
                                 count > 0 ? count : 100);
        if (suite == "norm" || suite == "all")
            bad += suite_norm(em, max_n, max_deg);
        out << (bad == 0 ? "ok\n" : "FAILED\n");
        if (bad != 0) rc = 1;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vvjack");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        CLI::App* a = &app;
        while (!a->get_subcommands().empty()) a = a->get_subcommands().front();
        out << a->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidShape& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidFilling& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace vvjack::cli
