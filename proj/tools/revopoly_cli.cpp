// Command-line driver: tabulation, orthogonality and kernel verification,
// spectral residual checks and projections, with CSV/JSON artifacts.
//
// Exit codes: 0 success, 2 usage, 3 parameter domain, 4 tolerance failure,
// 5 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "revo/basis.hpp"
#include "revo/kernels.hpp"
#include "revo/spectral.hpp"
#include "revo/sphereball.hpp"

using json = nlohmann::json;
using namespace revo;

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitTolerance = 4;
constexpr int kExitIo = 5;

int thread_cap() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("REVOPOLY_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

// comma-separated key=value weight/geometry parameters
void parse_params(const std::string& text, WeightSpec& w, DomainSpec& dom) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad parameter (want key=value): " + item);
        const std::string key = item.substr(0, eq);
        const double val = std::stod(item.substr(eq + 1));
        if (key == "a") w.alpha = val;
        else if (key == "b") w.beta = val;
        else if (key == "g") w.gamma = val;
        else if (key == "th") w.theta = val;
        else if (key == "mu") w.mu = val;
        else if (key == "lambda") w.lambda = val;
        else if (key == "fa") dom.fa = val;
        else if (key == "fb") dom.fb = val;
        else throw std::invalid_argument("unknown parameter key: " + key);
    }
}

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "any") return Parity::Any;
    throw std::invalid_argument("unknown parity: " + s);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw io_error("cannot open output file: " + path);
    return file;
}

// rejection sampling of interior points from a bounding box
std::vector<std::array<double, 4>> sample_interior(const DomainSpec& dom,
                                                   int count,
                                                   std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    std::vector<std::array<double, 4>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100000 * count)
            throw std::runtime_error("interior sampling did not converge");
        std::array<double, 4> p{};
        for (int i = 0; i < dom.d; ++i) p[i] = uni(rng);
        p[3] = uni(rng);
        if (dom.contains(p.data(), p[3])) out.push_back(p);
    }
    return out;
}

// margin-respecting points for the spectral checks, generated in the base
// coordinates and mapped where needed
std::vector<std::array<double, 4>> sample_spectral(const OperatorSpec& spec,
                                                   int count,
                                                   std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<std::array<double, 4>> out;
    const int d = spec.dom.d;
    while (static_cast<int>(out.size()) < count) {
        std::array<double, 4> p{};
        switch (spec.op) {
            case OperatorId::ConeD: {
                const double t = 0.25 + 0.6 * uni(rng);
                const double s = (t - 0.15) * std::sqrt(uni(rng));
                const double ph = 2.0 * std::acos(-1.0) * uni(rng);
                p[0] = s * std::cos(ph);
                p[1] = s * std::sin(ph);
                if (d == 3) p[2] = 0.3 * p[1], p[1] *= 0.95;
                p[3] = t;
                break;
            }
            case OperatorId::DoubleConeE:
            case OperatorId::DoubleConeO:
            case OperatorId::MappedE: {
                double z = 0.35 + 0.5 * uni(rng);
                if (uni(rng) < 0.5) z = -z;
                const double s = (std::abs(z) - 0.15) * std::sqrt(uni(rng));
                const double ph = 2.0 * std::acos(-1.0) * uni(rng);
                p[0] = s * std::cos(ph);
                p[1] = s * std::sin(ph);
                if (d == 3) p[2] = 0.3 * p[1], p[1] *= 0.95;
                p[3] = z;
                if (spec.op == OperatorId::MappedE) {
                    const double ps = s * s;
                    p[3] = std::copysign(
                        std::sqrt(map_tsq(spec.dom, ps, z * z)), z);
                }
                break;
            }
            case OperatorId::BallD: {
                const double r = 0.85 * std::pow(uni(rng), 1.0 / d);
                const double ph = 2.0 * std::acos(-1.0) * uni(rng);
                p[0] = r * std::cos(ph);
                p[1] = r * std::sin(ph);
                if (d == 3) {
                    const double c = 2.0 * uni(rng) - 1.0;
                    p[0] = r * std::sqrt(1 - c * c) * std::cos(ph);
                    p[1] = r * std::sqrt(1 - c * c) * std::sin(ph);
                    p[2] = r * c;
                }
                break;
            }
            case OperatorId::SphereLB: {
                std::normal_distribution<double> gauss;
                double n2 = 0.0;
                for (int i = 0; i < d; ++i) {
                    p[i] = gauss(rng);
                    n2 += p[i] * p[i];
                }
                for (int i = 0; i < d; ++i) p[i] /= std::sqrt(n2);
                break;
            }
        }
        out.push_back(p);
    }
    return out;
}

struct CommonArgs {
    std::string family = "doublecone";
    int d = 2;
    std::string params;
    std::string parity = "any";
    unsigned seed = 0;
};

Basis make_basis(const CommonArgs& a) {
    DomainSpec dom;
    dom.family = family_from_string(a.family);
    dom.d = a.d;
    WeightSpec w;
    parse_params(a.params, w, dom);
    return Basis(dom, w);
}

int cmd_dims(const CommonArgs& a, int nmax, const std::string& out_path) {
    Basis b = make_basis(a);
    const Parity p = parity_from_string(a.parity);
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    os << "n,count\n";
    for (int n = 0; n <= nmax; ++n)
        os << n << "," << b.enumerate(n, p).size() << "\n";
    return 0;
}

int cmd_tabulate(const CommonArgs& a, int n, const std::string& points_path,
                 int grid, const std::string& out_path) {
    Basis b = make_basis(a);
    const Parity p = parity_from_string(a.parity);
    std::vector<std::array<double, 4>> pts;
    if (!points_path.empty()) {
        std::ifstream in(points_path);
        if (!in) throw io_error("cannot read points file: " + points_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::stringstream ls(line);
            std::array<double, 4> pt{};
            std::string cell;
            for (int i = 0; i < a.d + 1; ++i) {
                if (!std::getline(ls, cell, ','))
                    throw io_error("malformed points row: " + line);
                const double v = std::stod(cell);
                if (i < a.d) pt[i] = v;
                else pt[3] = v;
            }
            pts.push_back(pt);
        }
    } else {
        std::mt19937 rng(a.seed);
        pts = sample_interior(b.domain(), grid, rng);
    }
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    os << "n,k,j,ell";
    for (int i = 1; i <= a.d; ++i) os << ",x" << i;
    os << ",t,value\n";
    for (const BasisIndex& idx : b.enumerate(n, p))
        for (const auto& pt : pts) {
            os << idx.n << "," << idx.k << "," << idx.j << "," << idx.ell;
            for (int i = 0; i < a.d; ++i) os << "," << fmt(pt[i]);
            os << "," << fmt(pt[3]) << ","
               << fmt(b.eval(idx, pt.data(), pt[3])) << "\n";
        }
    return 0;
}

int cmd_gram(const CommonArgs& a, int nmax, int quad_degree, double tol,
             const std::string& out_path) {
    Basis b = make_basis(a);
    Parity p = parity_from_string(a.parity);
    if (quad_degree <= 0) quad_degree = 2 * nmax + 2;
    QuadratureRule rule = b.rule(quad_degree, p);
    const auto indices = b.enumerate_upto(nmax, p);
    const size_t m = indices.size();
    // precompute values: rows of the evaluation matrix, parallel over basis
    std::vector<std::vector<double>> vals(m,
                                          std::vector<double>(rule.nodes.size()));
    {
        const int nthreads = thread_cap();
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int tI = 0; tI < nthreads; ++tI)
            pool.emplace_back([&]() {
                for (size_t i = next++; i < m; i = next++)
                    for (size_t q = 0; q < rule.nodes.size(); ++q)
                        vals[i][q] = b.eval(indices[i], rule.nodes[q].data(),
                                            rule.nodes[q][3]);
            });
        for (auto& th : pool) th.join();
    }
    double max_off = 0.0, max_diag = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double ni = b.norm(indices[i]);
        for (size_t jc = i; jc < m; ++jc) {
            double acc = 0.0, comp = 0.0;
            for (size_t q = 0; q < rule.nodes.size(); ++q) {
                const double term =
                    rule.weights[q] * vals[i][q] * vals[jc][q] - comp;
                const double sum = acc + term;
                comp = (sum - acc) - term;
                acc = sum;
            }
            if (i == jc) {
                max_diag = std::max(max_diag, std::abs(acc - ni) / ni);
            } else {
                const double nj = b.norm(indices[jc]);
                max_off = std::max(max_off, std::abs(acc) / std::sqrt(ni * nj));
            }
        }
    }
    const bool pass = max_off <= tol && max_diag <= tol;
    json rep;
    rep["family"] = a.family;
    rep["d"] = a.d;
    rep["params"] = a.params;
    rep["parity"] = a.parity;
    rep["nmax"] = nmax;
    rep["quad_degree"] = quad_degree;
    rep["size"] = m;
    rep["max_offdiagonal"] = max_off;
    rep["max_diagonal_rel_error"] = max_diag;
    rep["tol"] = tol;
    rep["pass"] = pass;
    std::ofstream file;
    open_out(out_path, file) << rep.dump(2) << "\n";
    return pass ? 0 : kExitTolerance;
}

int cmd_kernel(const CommonArgs& a, const std::string& check, int n, int pairs,
               double tol, const std::string& out_path) {
    DomainSpec dom;
    dom.d = a.d;
    WeightSpec w;
    if (check == "cone") dom.family = Family::Cone;
    else if (check == "doublecone" || check == "oddeven")
        dom.family = Family::DoubleCone;
    else if (check == "mapped") dom.family = family_from_string(a.family);
    else throw std::invalid_argument("unknown kernel check: " + check);
    parse_params(a.params, w, dom);
    std::mt19937 rng(a.seed);
    std::vector<std::array<double, 4>> pts;
    if (check == "mapped") {
        // sample in base coordinates and push through the map
        DomainSpec base = dom;
        base.family = Family::DoubleCone;
        pts = sample_interior(base, 2 * pairs, rng);
        for (auto& p : pts) {
            double ps = 0.0;
            for (int i = 0; i < dom.d; ++i) ps += p[i] * p[i];
            p[3] = std::copysign(
                std::sqrt(std::max(0.0, map_tsq(dom, ps, p[3] * p[3]))), p[3]);
        }
    } else {
        pts = sample_interior(dom, 2 * pairs, rng);
    }
    double worst = 0.0;
    if (check == "oddeven") {
        for (int i = 0; i < pairs; ++i) {
            const auto& p = pts[2 * i];
            const auto& q = pts[2 * i + 1];
            for (int deg = 1; deg <= n; ++deg) {
                OddEvenPair r = oddeven_relation(dom.d, w.beta, w.gamma,
                                                 w.theta, deg, p.data(), p[3],
                                                 q.data(), q[3]);
                worst = std::max(worst,
                                 std::abs(r.odd_kernel - r.relation_value) /
                                     std::max(1.0, std::abs(r.odd_kernel)));
            }
        }
    } else {
        WeightSpec bw = w;
        if (check != "cone") bw.theta = 0.5;
        Basis b(dom, bw);
        const Parity par = check == "cone" ? Parity::Any : Parity::Even;
        for (int i = 0; i < pairs; ++i) {
            const auto& p = pts[2 * i];
            const auto& q = pts[2 * i + 1];
            for (int deg = 0; deg <= n; ++deg) {
                double closed = 0.0;
                if (check == "cone")
                    closed = cone_kernel(dom.d, w.mu, w.gamma, deg, p.data(),
                                         p[3], q.data(), q[3]);
                else if (check == "doublecone")
                    closed = doublecone_even_kernel(dom.d, w.beta, w.gamma, deg,
                                                    p.data(), p[3], q.data(),
                                                    q[3]);
                else
                    closed = mapped_even_kernel(dom, w.beta, w.gamma, deg,
                                                p.data(), p[3], q.data(), q[3]);
                const double sum =
                    b.kernel_sum(deg, par, p.data(), p[3], q.data(), q[3]);
                worst = std::max(worst, std::abs(closed - sum) /
                                            std::max(1.0, std::abs(sum)));
            }
        }
    }
    const bool pass = worst <= tol;
    json rep;
    rep["check"] = check;
    rep["d"] = a.d;
    rep["params"] = a.params;
    rep["n"] = n;
    rep["pairs"] = pairs;
    rep["seed"] = a.seed;
    rep["max_residual"] = worst;
    rep["tol"] = tol;
    rep["pass"] = pass;
    std::ofstream file;
    open_out(out_path, file) << rep.dump(2) << "\n";
    return pass ? 0 : kExitTolerance;
}

int cmd_eigen(const CommonArgs& a, const std::string& opname, int n, int npts,
              double h, double tol, const std::string& out_path) {
    OperatorSpec spec;
    if (opname == "coned") spec.op = OperatorId::ConeD;
    else if (opname == "doubleconee") spec.op = OperatorId::DoubleConeE;
    else if (opname == "doubleconeo") spec.op = OperatorId::DoubleConeO;
    else if (opname == "balld") spec.op = OperatorId::BallD;
    else if (opname == "spherelb") spec.op = OperatorId::SphereLB;
    else if (opname == "mappede") spec.op = OperatorId::MappedE;
    else throw std::invalid_argument("unknown operator: " + opname);
    spec.dom.d = a.d;
    spec.h = h;
    switch (spec.op) {
        case OperatorId::ConeD: spec.dom.family = Family::Cone; break;
        case OperatorId::MappedE:
            spec.dom.family = family_from_string(a.family);
            break;
        default: spec.dom.family = Family::DoubleCone; break;
    }
    parse_params(a.params, spec.w, spec.dom);
    std::mt19937 rng(a.seed);
    const auto pts = sample_spectral(spec, npts, rng);
    double worst = 0.0;
    for (int deg = 0; deg <= n; ++deg) {
        const double lam = spectral_eigenvalue(spec, deg);
        std::vector<EvalFn> fns;
        switch (spec.op) {
            case OperatorId::BallD:
                for (int m = 0; 2 * m <= deg; ++m)
                    for (int ell = 1; ell <= dim_harmonic(deg - 2 * m, a.d);
                         ++ell) {
                        BallIndex bi{a.d, spec.w.mu, deg, m, ell};
                        fns.push_back([bi](const double* x, double) {
                            return ball_op_eval(bi, x);
                        });
                    }
                break;
            case OperatorId::SphereLB:
                for (int ell = 1; ell <= dim_harmonic(deg, a.d); ++ell) {
                    HarmonicIndex hi{a.d, deg, ell};
                    fns.push_back([hi](const double* x, double) {
                        return sph_eval(hi, x);
                    });
                }
                break;
            default: {
                Parity par = Parity::Any;
                if (spec.op == OperatorId::DoubleConeE ||
                    spec.op == OperatorId::MappedE)
                    par = Parity::Even;
                if (spec.op == OperatorId::DoubleConeO) {
                    par = Parity::Odd;
                    if (deg == 0) continue;
                }
                auto basis = std::make_shared<Basis>(spec.dom, spec.w);
                for (const BasisIndex& idx : basis->enumerate(deg, par))
                    fns.push_back([basis, idx](const double* x, double t) {
                        return basis->eval(idx, x, t);
                    });
                break;
            }
        }
        for (const EvalFn& u : fns)
            worst = std::max(worst, spectral_residual(spec, u, lam, pts));
    }
    const bool pass = worst <= tol;
    json rep;
    rep["operator"] = opname;
    rep["params"] = a.params;
    rep["n"] = n;
    rep["points"] = npts;
    rep["h"] = h;
    rep["seed"] = a.seed;
    rep["max_residual"] = worst;
    rep["tol"] = tol;
    rep["pass"] = pass;
    std::ofstream file;
    open_out(out_path, file) << rep.dump(2) << "\n";
    return pass ? 0 : kExitTolerance;
}

int cmd_project(const CommonArgs& a, const std::string& fname, int N,
                int quad_degree, const std::string& out_path) {
    Basis b = make_basis(a);
    EvalFn f;
    if (fname == "one") {
        f = [](const double*, double) { return 1.0; };
    } else if (fname == "poly3") {
        f = [](const double* x, double t) {
            return 1.0 + x[0] - 2.0 * x[1] * t + x[0] * x[0] * t + t * t * t;
        };
    } else if (fname == "gauss") {
        const int d = a.d;
        f = [d](const double* x, double t) {
            double p = t * t;
            for (int i = 0; i < d; ++i) p += x[i] * x[i];
            return std::exp(-p);
        };
    } else {
        // CSV of basis coefficients: rows n,k,j,ell,coefficient
        std::ifstream in(fname);
        if (!in) throw io_error("cannot read function file: " + fname);
        auto target = std::make_shared<Projection>();
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0])))
                continue;
            std::stringstream ls(line);
            std::string cell;
            int vals[4];
            for (int i = 0; i < 4; ++i) {
                if (!std::getline(ls, cell, ','))
                    throw io_error("malformed coefficient row: " + line);
                vals[i] = std::stoi(cell);
            }
            if (!std::getline(ls, cell, ','))
                throw io_error("malformed coefficient row: " + line);
            target->indices.push_back({vals[0], vals[1], vals[2], vals[3],
                                       Parity::Any});
            target->coefficients.push_back(std::stod(cell));
        }
        auto basis = std::make_shared<Basis>(b.domain(), b.weight());
        f = [target, basis](const double* x, double t) {
            return target->eval(*basis, x, t);
        };
    }
    if (quad_degree <= 0) quad_degree = 2 * N + 6;
    Projection pr = project(b, f, N, quad_degree);
    json rep;
    rep["family"] = a.family;
    rep["d"] = a.d;
    rep["params"] = a.params;
    rep["N"] = N;
    rep["quad_degree"] = quad_degree;
    json terms = json::array();
    for (size_t i = 0; i < pr.indices.size(); ++i) {
        json t;
        t["n"] = pr.indices[i].n;
        t["k"] = pr.indices[i].k;
        t["j"] = pr.indices[i].j;
        t["ell"] = pr.indices[i].ell;
        t["coefficient"] = pr.coefficients[i];
        terms.push_back(t);
    }
    rep["terms"] = terms;
    std::ofstream file;
    open_out(out_path, file) << rep.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal polynomial bases on domains of revolution"};
    app.require_subcommand(1);

    CommonArgs a;
    int nmax = 4, n = 3, grid = 10, pairs = 10, npts = 20, quad_degree = 0;
    double tol = 1e-6, h = 1e-3;
    std::string out_path, points_path, check = "cone", opname = "doubleconee";
    std::string fname = "poly3";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", a.family, "domain family name");
        sub->add_option("--d", a.d, "cross-section dimension (2 or 3)");
        sub->add_option("--params", a.params,
                        "comma-separated key=value exponents "
                        "(a,b,g,th,mu,lambda,fa,fb)");
        sub->add_option("--parity", a.parity, "even|odd|any");
        sub->add_option("--seed", a.seed, "random seed (default 0)");
        sub->add_option("--out", out_path, "output file ('-' for stdout)");
    };

    CLI::App* dims = app.add_subcommand("dims", "dimension table");
    add_common(dims);
    dims->add_option("--nmax", nmax, "maximum degree");

    CLI::App* tab = app.add_subcommand("tabulate", "evaluate basis elements");
    add_common(tab);
    tab->add_option("--n", n, "degree");
    tab->add_option("--points", points_path, "CSV points file (x...,t rows)");
    tab->add_option("--grid", grid, "number of sampled interior points");

    CLI::App* gr = app.add_subcommand("gram", "orthogonality check");
    add_common(gr);
    gr->add_option("--nmax", nmax, "maximum degree");
    gr->add_option("--quad-degree", quad_degree, "quadrature exactness degree");
    gr->add_option("--tol", tol, "tolerance");

    CLI::App* ker = app.add_subcommand("kernel", "kernel formula check");
    add_common(ker);
    ker->add_option("--check", check, "cone|doublecone|mapped|oddeven");
    ker->add_option("--n", n, "maximum degree");
    ker->add_option("--pairs", pairs, "number of random point pairs");
    ker->add_option("--tol", tol, "tolerance");

    CLI::App* eig = app.add_subcommand("eigen", "spectral residual check");
    eig->set_help_flag("--help", "print help");  // frees -h for the FD step
    add_common(eig);
    eig->add_option("--op", opname,
                    "coned|doubleconee|doubleconeo|balld|spherelb|mappede");
    eig->add_option("--n", n, "maximum degree");
    eig->add_option("--points", npts, "number of test points");
    eig->add_option("--h", h, "finite-difference step");
    eig->add_option("--tol", tol, "tolerance");

    int proj_deg = 4;
    CLI::App* prj = app.add_subcommand("project", "Fourier coefficients");
    add_common(prj);
    prj->add_option("--f", fname, "builtin name (one|poly3|gauss) or CSV file");
    prj->add_option("--N", proj_deg, "projection degree");
    prj->add_option("--quad-degree", quad_degree, "quadrature exactness degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(a, nmax, out_path);
        if (tab->parsed())
            return cmd_tabulate(a, n, points_path, grid, out_path);
        if (gr->parsed()) return cmd_gram(a, nmax, quad_degree, tol, out_path);
        if (ker->parsed())
            return cmd_kernel(a, check, n, pairs, tol, out_path);
        if (eig->parsed())
            return cmd_eigen(a, opname, n, npts, h, tol, out_path);
        if (prj->parsed())
            return cmd_project(a, fname, proj_deg, quad_degree, out_path);
    } catch (const io_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitIo;
    } catch (const capability_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
