#include "rectwalk/errors.hpp"
#include "rectwalk/hitting.hpp"
#include "rectwalk/scmap.hpp"
#include "rectwalk/validation.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace rectwalk;

// ---------------------------------------------------------------------------
// Output records: an ordered list of typed fields, rendered as text, CSV or
// JSON with a configurable count of significant digits.
// ---------------------------------------------------------------------------

struct Field {
    enum class Kind { number, integer, text, boolean };
    std::string key;
    Kind kind = Kind::number;
    double num = 0.0;
    long long ival = 0;
    std::string str;
    bool flag = false;
};

Field num_field(std::string key, double v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::number;
    f.num = v;
    return f;
}

Field int_field(std::string key, long long v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::integer;
    f.ival = v;
    return f;
}

Field text_field(std::string key, std::string v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::text;
    f.str = std::move(v);
    return f;
}

Field bool_field(std::string key, bool v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::boolean;
    f.flag = v;
    return f;
}

using Record = std::vector<Field>;

std::string fmt_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::string(buf);
}

std::string cell_value(const Field& f, int digits) {
    switch (f.kind) {
        case Field::Kind::number: return fmt_double(f.num, digits);
        case Field::Kind::integer: return std::to_string(f.ival);
        case Field::Kind::text: return f.str;
        case Field::Kind::boolean: return f.flag ? "true" : "false";
    }
    return {};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_text(const std::vector<Record>& recs, int digits, std::ostream& os) {
    if (recs.size() == 1) {
        for (const Field& f : recs[0])
            os << f.key << " = " << cell_value(f, digits) << "\n";
        return;
    }
    std::vector<std::size_t> width(recs[0].size());
    for (std::size_t j = 0; j < recs[0].size(); ++j)
        width[j] = recs[0][j].key.size();
    for (const Record& rec : recs)
        for (std::size_t j = 0; j < rec.size(); ++j)
            width[j] = std::max(width[j], cell_value(rec[j], digits).size());
    auto pad = [&](const std::string& s, std::size_t w, bool last) {
        os << s;
        if (!last)
            os << std::string(w - s.size() + 2, ' ');
    };
    for (std::size_t j = 0; j < recs[0].size(); ++j)
        pad(recs[0][j].key, width[j], j + 1 == recs[0].size());
    os << "\n";
    for (const Record& rec : recs) {
        for (std::size_t j = 0; j < rec.size(); ++j)
            pad(cell_value(rec[j], digits), width[j], j + 1 == rec.size());
        os << "\n";
    }
}

void write_csv(const std::vector<Record>& recs, int digits, std::ostream& os) {
    for (std::size_t j = 0; j < recs[0].size(); ++j)
        os << (j ? "," : "") << csv_escape(recs[0][j].key);
    os << "\n";
    for (const Record& rec : recs) {
        for (std::size_t j = 0; j < rec.size(); ++j)
            os << (j ? "," : "") << csv_escape(cell_value(rec[j], digits));
        os << "\n";
    }
}

void write_json(const std::vector<Record>& recs, int digits, std::ostream& os) {
    auto emit_record = [&](const Record& rec, const char* indent) {
        os << "{\n";
        for (std::size_t j = 0; j < rec.size(); ++j) {
            os << indent << "  \"" << json_escape(rec[j].key) << "\": ";
            if (rec[j].kind == Field::Kind::text)
                os << "\"" << json_escape(rec[j].str) << "\"";
            else
                os << cell_value(rec[j], digits);
            os << (j + 1 < rec.size() ? ",\n" : "\n");
        }
        os << indent << "}";
    };
    if (recs.size() == 1) {
        emit_record(recs[0], "");
        os << "\n";
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        os << "  ";
        emit_record(recs[i], "  ");
        os << (i + 1 < recs.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

void write_records(const std::vector<Record>& recs, const std::string& format,
                   int digits) {
    if (recs.empty()) return;
    if (format == "csv") write_csv(recs, digits, std::cout);
    else if (format == "json") write_json(recs, digits, std::cout);
    else write_text(recs, digits, std::cout);
}

// ---------------------------------------------------------------------------
// Verb helpers
// ---------------------------------------------------------------------------

// Aspect ratios below 1 describe the same rectangle rotated by 90°; compute
// at 1/r and tell the caller that the reported "end" and "side" roles are the
// transposed ones.
struct CanonicalAspect {
    double r;
    std::string notice; // empty when no canonicalization happened
};

CanonicalAspect canonicalize(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::domain_error("aspect ratio must be positive and finite");
    if (r < 1.0) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "aspect %.12g canonicalized to %.12g; reported end and side "
                      "roles are swapped relative to the request", r, 1.0 / r);
        return {1.0 / r, buf};
    }
    return {r, ""};
}

// Resolves the ratio method selector into concrete results.  "all" yields
// one record per method applicable at this exponent.
std::vector<RatioResult> compute_ratios(const std::string& method, double r,
                                        double b, double tol) {
    const bool all = method == "all";
    std::vector<RatioResult> out;
    if (all || method == "quadrature")
        out.push_back(ratio_quadrature(alpha_from_aspect(r), b, tol));
    if (method == "closed" || (all && b == 1.0)) {
        if (b != 1.0)
            throw std::domain_error("the closed method exists for exponent 1 only "
                                    "(brownian case)");
        out.push_back(ratio_closed_rw(alpha_from_aspect(r)));
    }
    if (all || method == "leading")
        out.push_back(ratio_asymptotic_leading(r, b));
    if (method == "two-term" || (all && b <= 1.0)) {
        if (b == 1.0)
            out.push_back(ratio_rw_asymptotic(r, 2));
        else
            out.push_back(ratio_asymptotic_two_term(r, b));
    }
    return out;
}

// Translates library method identifiers into the CLI's --method vocabulary
// so the output can be fed straight back into another invocation.
std::string cli_method_name(RatioMethod m) {
    switch (m) {
        case RatioMethod::closed_rw: return "closed";
        case RatioMethod::two_term:  return "two-term";
        default:                     return method_name(m);
    }
}

Record ratio_record(const RatioResult& res, const CanonicalAspect& asp,
                    bool with_probability) {
    Record rec;
    rec.push_back(num_field("aspect", res.r));
    rec.push_back(num_field("exponent", res.b));
    rec.push_back(text_field("method", cli_method_name(res.method)));
    if (with_probability)
        rec.push_back(num_field("probability", end_probability(res)));
    rec.push_back(num_field("ratio", res.value));
    rec.push_back(num_field("err_estimate", res.err_estimate));
    rec.push_back(bool_field("regime_warning", res.regime_warning));
    if (!asp.notice.empty())
        rec.push_back(text_field("notice", asp.notice));
    return rec;
}

int run(int argc, char** argv) {
    CLI::App app{"End-versus-side hitting ratios for conformally invariant walks "
                 "in a rectangle"};
    app.require_subcommand(1);

    std::string format = "text";
    int digits = 12;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--digits", digits, "significant digits for numeric fields")
        ->check(CLI::Range(1, 17));

    // alpha
    auto* cmd_alpha = app.add_subcommand("alpha", "modulus alpha for an aspect ratio")->fallthrough();
    double alpha_aspect = 0.0;
    std::string alpha_method = "auto";
    cmd_alpha->add_option("--aspect", alpha_aspect, "aspect ratio r")->required();
    cmd_alpha->add_option("--method", alpha_method, "inversion path")
        ->check(CLI::IsMember({"theta", "asymptotic", "auto"}));

    // ratio
    auto* cmd_ratio = app.add_subcommand("ratio", "end-versus-side hitting ratio")->fallthrough();
    double ratio_aspect = 0.0, ratio_b = 0.0, ratio_tol = 1e-10;
    std::string ratio_method = "quadrature";
    cmd_ratio->add_option("--aspect", ratio_aspect, "aspect ratio r")->required();
    cmd_ratio->add_option("--exponent", ratio_b, "hitting exponent b")->required();
    cmd_ratio->add_option("--method", ratio_method, "computation method")
        ->check(CLI::IsMember({"quadrature", "closed", "leading", "two-term", "all"}));
    cmd_ratio->add_option("--tol", ratio_tol, "relative tolerance (quadrature)");

    // probability
    auto* cmd_prob = app.add_subcommand("probability", "end-hitting probability")->fallthrough();
    double prob_aspect = 0.0, prob_b = 0.0, prob_tol = 1e-10;
    std::string prob_method = "quadrature";
    cmd_prob->add_option("--aspect", prob_aspect, "aspect ratio r")->required();
    cmd_prob->add_option("--exponent", prob_b, "hitting exponent b")->required();
    cmd_prob->add_option("--method", prob_method, "computation method")
        ->check(CLI::IsMember({"quadrature", "closed", "leading", "two-term", "all"}));
    cmd_prob->add_option("--tol", prob_tol, "relative tolerance (quadrature)");

    // table
    auto* cmd_table = app.add_subcommand("table", "ratio table over aspects and exponents")->fallthrough();
    double t_min = 0.0, t_max = 0.0, t_step = 0.0, t_tol = 1e-10;
    std::vector<double> t_exponents;
    std::string t_method = "quadrature";
    cmd_table->add_option("--aspect-min", t_min, "first aspect ratio")->required();
    cmd_table->add_option("--aspect-max", t_max, "last aspect ratio")->required();
    cmd_table->add_option("--aspect-step", t_step, "aspect increment")->required();
    cmd_table->add_option("--exponents", t_exponents, "comma-separated exponents")
        ->required()
        ->delimiter(',');
    cmd_table->add_option("--method", t_method, "computation method")
        ->check(CLI::IsMember({"quadrature", "closed", "leading", "two-term"}));
    cmd_table->add_option("--tol", t_tol, "relative tolerance (quadrature)");

    // map
    auto* cmd_map = app.add_subcommand("map", "boundary trace of the conformal map")->fallthrough();
    double map_aspect = 0.0;
    int map_samples = 0;
    cmd_map->add_option("--aspect", map_aspect, "aspect ratio r")->required();
    cmd_map->add_option("--samples", map_samples, "number of boundary samples")
        ->required()
        ->check(CLI::PositiveNumber);

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "run the acceptance suite")->fallthrough();
    std::string level = "full";
    cmd_validate->add_option("--level", level, "quick skips lattice heights above 79")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<Record> recs;
        int exit_code = 0;

        if (*cmd_alpha) {
            const CanonicalAspect asp = canonicalize(alpha_aspect);
            AlphaPath path = AlphaPath::automatic;
            std::string path_name = alpha_method;
            if (alpha_method == "theta") path = AlphaPath::theta;
            else if (alpha_method == "asymptotic") path = AlphaPath::asymptotic;
            else path_name = asp.r < 5.0 ? "theta" : "asymptotic";
            const ModulusAlpha al = alpha_from_aspect(asp.r, path);
            Record rec;
            rec.push_back(num_field("aspect", asp.r));
            rec.push_back(text_field("method", path_name));
            rec.push_back(num_field("alpha", al.alpha()));
            rec.push_back(num_field("excess", al.excess));
            rec.push_back(num_field("aspect_roundtrip", aspect_from_alpha(al)));
            if (!asp.notice.empty()) rec.push_back(text_field("notice", asp.notice));
            recs.push_back(std::move(rec));
        } else if (*cmd_ratio) {
            const CanonicalAspect asp = canonicalize(ratio_aspect);
            for (const RatioResult& res : compute_ratios(ratio_method, asp.r, ratio_b, ratio_tol))
                recs.push_back(ratio_record(res, asp, false));
        } else if (*cmd_prob) {
            const CanonicalAspect asp = canonicalize(prob_aspect);
            for (const RatioResult& res : compute_ratios(prob_method, asp.r, prob_b, prob_tol))
                recs.push_back(ratio_record(res, asp, true));
        } else if (*cmd_table) {
            if (!(t_step > 0.0))
                throw std::domain_error("table: aspect-step must be positive");
            if (!(t_min > 0.0) || t_max < t_min)
                throw std::domain_error("table: need 0 < aspect-min <= aspect-max");
            if (t_exponents.empty())
                throw std::domain_error("table: need at least one exponent");
            const long steps = static_cast<long>((t_max - t_min) / t_step + 1e-9);
            for (long k = 0; k <= steps; ++k) {
                const CanonicalAspect asp = canonicalize(t_min + static_cast<double>(k) * t_step);
                for (double b : t_exponents) {
                    for (const RatioResult& res : compute_ratios(t_method, asp.r, b, t_tol)) {
                        Record rec = ratio_record(res, CanonicalAspect{asp.r, ""}, false);
                        rec.push_back(text_field("notice", asp.notice));
                        recs.push_back(std::move(rec));
                    }
                }
            }
        } else if (*cmd_map) {
            const CanonicalAspect asp = canonicalize(map_aspect);
            const ModulusAlpha al = alpha_from_aspect(asp.r);
            const double a = al.alpha();
            for (int j = 0; j < map_samples; ++j) {
                const double u = a * (2.0 * j + 1.0 - map_samples) / map_samples;
                const BoundaryPoint pt = sc_map_boundary(u, al);
                Record rec;
                rec.push_back(num_field("u", u));
                rec.push_back(num_field("x", pt.x));
                rec.push_back(num_field("y", pt.y));
                rec.push_back(num_field("deriv_abs", sc_map_deriv_abs(u, al)));
                rec.push_back(num_field("density", hit_density_halfplane(u, a, BROWNIAN_B)));
                rec.push_back(text_field("notice", asp.notice));
                recs.push_back(std::move(rec));
            }
        } else if (*cmd_validate) {
            const auto results = run_acceptance(level == "full" ? ValidationLevel::full
                                                                : ValidationLevel::quick);
            bool all_pass = true;
            if (format == "text") {
                for (const CheckResult& c : results) {
                    std::printf("[%s] %-45s %s\n", c.pass ? "PASS" : "FAIL",
                                c.name.c_str(), c.detail.c_str());
                    all_pass = all_pass && c.pass;
                }
            } else {
                for (const CheckResult& c : results) {
                    Record rec;
                    rec.push_back(text_field("criterion", c.name));
                    rec.push_back(bool_field("pass", c.pass));
                    rec.push_back(text_field("detail", c.detail));
                    recs.push_back(std::move(rec));
                    all_pass = all_pass && c.pass;
                }
            }
            if (!all_pass) exit_code = 3;
        }

        write_records(recs, format, digits);
        return exit_code;
    } catch (const accuracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const integrand_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
