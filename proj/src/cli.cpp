#include "qmf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qmf/json_io.hpp"

namespace qmf::cli {

namespace {

constexpr long kDefaultTerms = 80;
constexpr long kDefaultDmin = -25;
constexpr long kDefaultTrials = 50;
constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
    long terms = kDefaultTerms;
    long dmin = kDefaultDmin;
    long trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";

    bool json() const { return format == "json"; }
};

long default_terms_from_env() {
    if (const char* env = std::getenv("QMF_TERMS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return kDefaultTerms;
}

void add_common_options(CLI::App& sub, Options& opt) {
    sub.add_option("--terms", opt.terms, "determined coefficients per expansion")
        ->capture_default_str();
    sub.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::optional<GeneratorName> generator_by_name(std::string name) {
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == "C4") return GeneratorName::C4;
    if (name == "C6") return GeneratorName::C6;
    if (name == "DELTA") return GeneratorName::Delta;
    if (name == "DELTA_INV") return GeneratorName::DeltaInv;
    if (name == "E2") return GeneratorName::E2;
    return std::nullopt;
}

// "NAME" or "realizer(d)" components joined by '*'; the last component must
// be a relative Witten entry of the catalog.
Witness parse_witness_expression(const std::string& text, const Catalog& catalog) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);

    auto component = [&](const std::string& raw) -> Witness {
        std::string token = raw;
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.rfind("realizer(", 0) == 0 && token.back() == ')') {
            const std::string inner = token.substr(9, token.size() - 10);
            try {
                return image_realizer(std::stol(inner));
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad realizer argument '" + inner + "'");
            }
        }
        return catalog.find(token);
    };

    Witness result = component(parts.back());
    for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
        result = product_witness(component(*it), result);
    return result;
}

int emit_expand(const std::string& expr, const Options& opt, std::ostream& out) {
    QSeries series = [&] {
        if (auto name = generator_by_name(expr)) return generator(*name, opt.terms);
        return expand(parse_mf_expression(expr), opt.terms);
    }();
    if (opt.json())
        out << to_json(series).dump(2) << "\n";
    else
        out << to_string(series) << "\n";
    return 0;
}

int emit_reduce(const std::string& input_path, long weight, const Options& opt, std::istream& in,
                std::ostream& out) {
    Json parsed;
    if (input_path.empty() || input_path == "-") {
        parsed = Json::parse(in);
    } else {
        std::ifstream file(input_path);
        if (!file) throw std::invalid_argument("cannot open input file '" + input_path + "'");
        parsed = Json::parse(file);
    }
    const QSeries series = qseries_from_json(parsed);
    const ReduceResult result = reduce(series, weight);
    if (opt.json()) {
        out << to_json(result).dump(2) << "\n";
        return 0;
    }
    out << "coords:";
    if (result.coords.empty()) out << " (none)";
    out << "\n";
    for (const auto& [m, c] : result.coords)
        out << "  " << to_string(m) << ": " << to_string(c) << "\n";
    out << "remainder: " << to_string(result.remainder) << "\n";
    out << "member: " << (result.is_member() ? "yes" : "no") << "\n";
    return 0;
}

int emit_pair(const std::string& flavor, const std::string& phi_expr, const std::string& x_text,
              const std::string& witness_expr, const Options& opt, std::ostream& out) {
    const Catalog catalog(opt.terms);
    PairingResult result;
    if (flavor == "sqft") {
        if (phi_expr.empty()) throw std::invalid_argument("pair sqft requires --phi");
        result = pair_sqft(parse_mf_expression(phi_expr),
                           parse_witness_expression(witness_expr, catalog));
    } else {
        if (x_text.empty()) throw std::invalid_argument("pair sqm requires --x");
        result = pair_sqm(rational_from_string(x_text),
                          parse_witness_expression(witness_expr, catalog));
    }
    if (opt.json())
        out << to_json(result).dump(2) << "\n";
    else
        out << to_string(result.value) << "\n";
    return 0;
}

int emit_catalog(const Options& opt, std::ostream& out) {
    const Catalog catalog(opt.terms);
    if (opt.json()) {
        Json entries = Json::array();
        for (const auto& w : catalog.entries()) entries.push_back(to_json(w));
        out << entries.dump(2) << "\n";
        return 0;
    }
    for (const auto& w : catalog.entries()) {
        out << w.name << "  degree " << w.degree << "  " << to_string(w.kind) << "\n";
        switch (w.kind) {
            case WitnessKind::string_class:
                out << "  Wit = " << to_string(w.witten_genus()) << "\n";
                break;
            case WitnessKind::relative_witten:
                out << "  Wit_rel = " << to_string(w.coset()) << "\n";
                break;
            case WitnessKind::relative_dirac:
                out << "  Ind = " << to_string(w.dirac_index()) << "\n";
                break;
        }
        out << "  provenance: " << w.provenance << "\n";
    }
    return 0;
}

int emit_prove(const std::string& flavor, const Options& opt, std::ostream& out) {
    const Catalog catalog(opt.terms);
    const LowerBoundReport report =
        flavor == "sqft" ? sqft_lower_bound(catalog) : sqm_lower_bound(catalog);
    if (opt.json()) {
        out << to_json(report).dump(2) << "\n";
        return 0;
    }
    out << flavor << " lower bound: " << report.bound << "\n";
    out << report.statement << "\n";
    for (const auto& c : report.cases) {
        out << "  d=" << c.d << "  " << c.method;
        if (c.n) out << "  n=" << *c.n;
        if (c.m) out << "  m=" << *c.m;
        if (c.pairing) out << "  pairing=" << to_string(*c.pairing);
        if (c.modulus) out << "  modulus=" << c.modulus->str();
        out << "\n";
        for (const auto& cite : c.citations) out << "      " << cite << "\n";
    }
    return 0;
}

class VerifyRunner {
public:
    VerifyRunner(std::ostream& out) : out_(out) {}

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        ++total_;
        if (ok) {
            ++passed_;
            out_ << "ok " << name << "\n";
        } else {
            out_ << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }

    int finish() {
        out_ << "verify: " << passed_ << "/" << total_ << " checks passed\n";
        return passed_ == total_ ? 0 : 1;
    }

private:
    std::ostream& out_;
    int total_ = 0;
    int passed_ = 0;
};

int emit_verify(const Options& opt, std::ostream& out) {
    VerifyRunner runner(out);
    const Catalog catalog(opt.terms);

    runner.check("generator identity c4^3 - c6^2 = 1728*Delta", [&] {
        const QSeries lhs = sub(pow(generator(GeneratorName::C4, opt.terms), 3),
                                pow(generator(GeneratorName::C6, opt.terms), 2));
        const QSeries rhs = scale(Rational(1728), generator(GeneratorName::Delta, opt.terms - 1));
        return sub(lhs, rhs).is_zero();
    });
    runner.check("Delta * Delta^-1 = 1", [&] {
        const QSeries prod = mul(generator(GeneratorName::Delta, opt.terms),
                                 generator(GeneratorName::DeltaInv, opt.terms));
        return sub(prod, QSeries::one(prod.horizon())).is_zero();
    });
    runner.check("weight-2 constant terms vanish to pole " + std::to_string(-opt.dmin), [&] {
        return constant_term_vanishing(2, -opt.dmin).pass;
    });
    runner.check("weight -2 control: q^0(c4*c6*Delta^-1) = -240", [&] {
        const auto report = constant_term_vanishing(-2, 1);
        return !report.pass && report.entries.size() == 1 &&
               report.entries.front().q0 == Rational(-240);
    });

    struct PairSetup {
        std::string label;
        MFElement phi;
        Witness witness;
    };
    const std::vector<PairSetup> setups = {
        {"pair(Delta^-1, D4S3)", MFElement::delta_power(-1), catalog.find("D4S3")},
        {"pair(Delta^-16, realizer(15)*D4S3)", MFElement::delta_power(-16),
         product_witness(image_realizer(15), catalog.find("D4S3"))},
        {"pair(Delta^-12, realizer(8)*USPIN76)", MFElement::delta_power(-12),
         product_witness(image_realizer(8), catalog.find("USPIN76"))},
    };
    for (const auto& setup : setups) {
        runner.check("well-definedness of " + setup.label + " over " + std::to_string(opt.trials) +
                         " trials",
                     [&] {
                         return well_definedness_check(setup.phi, setup.witness, opt.trials,
                                                       opt.seed)
                             .pass;
                     });
    }
    runner.check("negative control: E2 perturbation shifts pair(Delta^-1, D4S3)", [&] {
        const Witness& d4s3 = catalog.find("D4S3");
        const Rational base = pair_sqft(MFElement::delta_power(-1), d4s3).value;
        const Witness shifted =
            perturb_witness_by_series(d4s3, generator(GeneratorName::E2, opt.terms));
        return pair_sqft(MFElement::delta_power(-1), shifted).value != base;
    });

    runner.check("catalog coherence: relative Witten weights equal degree/2", [&] {
        for (const auto& w : catalog.entries()) validate_witness(w);
        return true;
    });
    runner.check("catalog coherence: K3 = 24 * D4S3", [&] {
        return coset_equal(coset_scale(Rational(24), catalog.find("D4S3").coset()),
                           catalog.find("K3").coset());
    });
    runner.check("catalog coherence: U_ETA3 = 12 * D4S3", [&] {
        return coset_equal(coset_scale(Rational(12), catalog.find("D4S3").coset()),
                           catalog.find("U_ETA3").coset());
    });
    runner.check("catalog coherence: string classes lie in the Witten image lattice", [&] {
        for (const auto& w : catalog.entries())
            if (w.kind == WitnessKind::string_class &&
                !image_lattice_contains(w.witten_genus()).contained)
                return false;
        return true;
    });
    runner.check("derivation: USPIN76 = E2*Delta^3 mod MF_38 in 4 steps", [&] {
        const auto derivation = derive_uspin76(catalog);
        return derivation.steps.size() == 4 &&
               coset_equal(derivation.result, catalog.find("USPIN76").coset());
    });

    return runner.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact modular-form arithmetic and periodicity certificates"};
    app.require_subcommand(1);

    Options opt;
    opt.terms = default_terms_from_env();

    std::string expand_expr;
    auto* expand_cmd = app.add_subcommand("expand", "print a q-expansion");
    expand_cmd->add_option("expression", expand_expr, "generator name or modular-form expression")
        ->required();
    add_common_options(*expand_cmd, opt);

    long reduce_weight = 0;
    std::string reduce_input;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a series against the weight basis");
    reduce_cmd->add_option("--weight", reduce_weight, "weight of the target space")->required();
    reduce_cmd->add_option("--input", reduce_input, "QSeries JSON file ('-' for stdin)");
    add_common_options(*reduce_cmd, opt);

    std::string pair_flavor, pair_phi, pair_x, pair_witness;
    auto* pair_cmd = app.add_subcommand("pair", "evaluate a secondary pairing");
    pair_cmd->add_option("flavor", pair_flavor, "sqft or sqm")
        ->required()
        ->check(CLI::IsMember({"sqft", "sqm"}));
    pair_cmd->add_option("--phi", pair_phi, "modular-form expression (sqft)");
    pair_cmd->add_option("--x", pair_x, "rational value (sqm)");
    pair_cmd->add_option("--witness", pair_witness, "catalog witness, optionally realizer(d)*NAME")
        ->required();
    add_common_options(*pair_cmd, opt);

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--trials", opt.trials, "perturbation trials")->capture_default_str();
    verify_cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--dmin", opt.dmin, "pole bound (most negative lead exponent)")
        ->capture_default_str();
    add_common_options(*verify_cmd, opt);

    std::string prove_flavor;
    auto* prove_cmd = app.add_subcommand("prove", "emit a periodicity lower-bound report");
    prove_cmd->add_option("flavor", prove_flavor, "sqft or sqm")
        ->required()
        ->check(CLI::IsMember({"sqft", "sqm"}));
    add_common_options(*prove_cmd, opt);

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in witnesses");
    add_common_options(*catalog_cmd, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (opt.terms < 1) throw std::invalid_argument("--terms must be positive");
        if (expand_cmd->parsed()) return emit_expand(expand_expr, opt, out);
        if (reduce_cmd->parsed()) return emit_reduce(reduce_input, reduce_weight, opt, in, out);
        if (pair_cmd->parsed())
            return emit_pair(pair_flavor, pair_phi, pair_x, pair_witness, opt, out);
        if (verify_cmd->parsed()) return emit_verify(opt, out);
        if (prove_cmd->parsed()) return emit_prove(prove_flavor, opt, out);
        if (catalog_cmd->parsed()) return emit_catalog(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const insufficient_precision& e) {
        err << "insufficient precision: " << e.what() << "\n";
        return 1;
    } catch (const Json::parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qmf::cli
