#include "cli.hpp"

#include "perfarr/association.hpp"
#include "perfarr/checkers.hpp"
#include "perfarr/constructions.hpp"
#include "perfarr/correlation.hpp"
#include "perfarr/io.hpp"
#include "perfarr/render.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>

namespace perfarr::cli {

namespace {

std::string shape_string(const Shape& shape) {
    std::string s;
    for (std::size_t t = 0; t < shape.size(); ++t) {
        if (t) s += 'x';
        s += std::to_string(shape[t]);
    }
    return s;
}

std::string shift_string(const ShiftVector& s) {
    std::string out;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (t) out += '|';
        out += std::to_string(s[t]);
    }
    return out;
}

void write_array(const ExponentArray& a, const std::string& path, std::ostream& out) {
    atomic_write(path, canonical_json(a) + "\n");
    out << "shape: " << shape_string(a.shape()) << "\n"
        << "modulus: " << a.modulus() << "\n"
        << "volume: " << a.volume() << "\n"
        << "wrote " << path << "\n";
}

// ---- generate ----------------------------------------------------------

struct GenerateArgs {
    std::int64_t d = 0, m = 0, n = 0, k = 0, r = 0, p = 1;
    bool allow_odd = false;
    bool allow_k0 = false;
    bool generator = false;
    std::string variant = "triangular";
    std::string output;
};

ChuVariant parse_variant(const std::string& v) {
    if (v == "triangular") return ChuVariant::Triangular;
    if (v == "quadratic") return ChuVariant::Quadratic;
    throw CLI::ValidationError("--variant must be triangular or quadratic");
}

void add_generate(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* gen = app.add_subcommand("generate", "Construct an array and write its JSON");
    gen->require_subcommand(1);
    auto args = std::make_shared<GenerateArgs>();

    const auto add_output = [&args](CLI::App* sub) {
        sub->add_option("-o,--output", args->output, "Output JSON path")->required();
    };
    const auto finish = [args, &exit_code, &out](std::function<ExponentArray()> build) {
        return [args, &exit_code, &out, build = std::move(build)] {
            write_array(build(), args->output, out);
            exit_code = 0;
        };
    };

    auto* chu_cmd = gen->add_subcommand("chu", "Chu sequence of length m");
    chu_cmd->add_option("--m", args->m, "length")->required();
    chu_cmd->add_option("--p", args->p, "coprime parameter");
    add_output(chu_cmd);
    chu_cmd->callback(finish([args] { return chu(args->m, args->p); }));

    auto* frank_cmd = gen->add_subcommand("frank", "Frank sequence of length n^2 over n roots");
    frank_cmd->add_option("--n", args->n, "side")->required();
    add_output(frank_cmd);
    frank_cmd->callback(finish([args] { return frank(args->n); }));

    auto* mil_cmd = gen->add_subcommand("milewski", "Milewski sequence of length m^(2k+1)");
    mil_cmd->add_option("--m", args->m)->required();
    mil_cmd->add_option("--k", args->k)->required();
    mil_cmd->add_option("--p", args->p, "coprime parameter");
    mil_cmd->add_flag("--allow-k0", args->allow_k0, "permit the k=0 extension (odd m)");
    add_output(mil_cmd);
    mil_cmd->callback(finish([args] { return milewski(args->m, args->k, args->p, args->allow_k0); }));

    auto* blake_cmd = gen->add_subcommand("blake_floor", "floor-construction sequence of length 4mn^(k+1)");
    blake_cmd->add_option("--m", args->m)->required();
    blake_cmd->add_option("--n", args->n)->required();
    blake_cmd->add_option("--k", args->k)->required();
    add_output(blake_cmd);
    blake_cmd->callback(finish([args] { return blake_floor(args->m, args->n, args->k); }));

    auto* gfrank_cmd = gen->add_subcommand("gfrank", "m-dimensional array of extent d^2 over d roots");
    gfrank_cmd->add_option("--d", args->d)->required();
    gfrank_cmd->add_option("--m", args->m)->required();
    gfrank_cmd->add_flag("--generator", args->generator, "emit the 2m-dimensional generator instead");
    add_output(gfrank_cmd);
    gfrank_cmd->callback(finish([args] {
        return args->generator ? gfrank_generator(args->d, args->m) : gfrank(args->d, args->m);
    }));

    auto* f2_cmd = gen->add_subcommand("floor2d", "2d^2 x 2d^2 array over d roots");
    f2_cmd->add_option("--d", args->d)->required();
    f2_cmd->add_flag("--allow-odd", args->allow_odd, "permit odd d (not perfect)");
    add_output(f2_cmd);
    f2_cmd->callback(finish([args] { return floor2d(args->d, args->allow_odd); }));

    auto* fnd_cmd = gen->add_subcommand("floor_nd", "2m-dimensional array of extent 2d^2 over d roots");
    fnd_cmd->add_option("--d", args->d)->required();
    fnd_cmd->add_option("--m", args->m)->required();
    fnd_cmd->add_flag("--allow-odd", args->allow_odd, "permit odd d (not perfect)");
    add_output(fnd_cmd);
    fnd_cmd->callback(finish([args] { return floor_nd(args->d, args->m, args->allow_odd); }));

    auto* gmil_cmd = gen->add_subcommand("gmilewski", "m-dimensional array of extent r^(2k+1) over r^(k+1) roots");
    gmil_cmd->add_option("--r", args->r)->required();
    gmil_cmd->add_option("--k", args->k)->required();
    gmil_cmd->add_option("--m", args->m)->required();
    gmil_cmd->add_option("--p", args->p, "coprime parameter");
    gmil_cmd->add_flag("--allow-odd", args->allow_odd, "permit odd r for the concatenated form");
    gmil_cmd->add_flag("--generator", args->generator, "emit the 2m-dimensional generator instead");
    gmil_cmd->add_option("--variant", args->variant, "Chu embedding: triangular|quadratic");
    add_output(gmil_cmd);
    gmil_cmd->callback(finish([args] {
        const ChuVariant v = parse_variant(args->variant);
        return args->generator ? gmilewski_generator(args->r, args->k, args->m, args->p, v)
                               : gmilewski(args->r, args->k, args->m, args->p, args->allow_odd, v);
    }));
}

// ---- verify ------------------------------------------------------------

void add_verify(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* verify = app.add_subcommand("verify", "Check perfect / aop / gaop on an array file");
    auto input = std::make_shared<std::string>();
    auto property = std::make_shared<std::string>();
    auto divisor = std::make_shared<std::int64_t>(0);
    auto report_path = std::make_shared<std::string>();
    verify->add_option("input", *input, "array JSON file")->required();
    verify->add_option("--property", *property, "perfect|aop|gaop")->required();
    verify->add_option("--divisor", *divisor, "divisor for aop/gaop");
    verify->add_option("--report", *report_path, "report JSON path (default: <input>.report.json)");
    verify->callback([=, &exit_code, &out] {
        const ExponentArray a = load_array(*input);
        PropertyReport report;
        if (*property == "perfect") {
            report = perfect_check(a);
        } else if (*property == "aop") {
            if (*divisor < 1) throw CLI::ValidationError("--divisor is required for aop");
            report = aop_check(a.dimensions() == 1 ? a : a.flatten_row_major(), *divisor);
        } else if (*property == "gaop") {
            if (*divisor < 1) throw CLI::ValidationError("--divisor is required for gaop");
            report = gaop_check(a, *divisor);
        } else {
            throw CLI::ValidationError("--property must be perfect, aop or gaop");
        }
        const std::string path = report_path->empty() ? *input + ".report.json" : *report_path;
        atomic_write(path, report_to_json(report).dump(2) + "\n");
        out << *property << ": " << (report.holds ? "holds" : "FAILS") << "\n";
        if (report.witness) out << "witness shift: " << shift_string(*report.witness) << "\n";
        if (!report.condition1_failures.empty())
            out << "condition 1 violations: " << report.condition1_failures.size() << "\n";
        if (!report.condition2_failures.empty())
            out << "condition 2 violations: " << report.condition2_failures.size() << "\n";
        out << "report: " << path << "\n";
        exit_code = report.holds ? 0 : 1;
    });
}

// ---- correlate ---------------------------------------------------------

void add_correlate(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* corr = app.add_subcommand("correlate", "All-shift cross-correlation of two array files");
    auto file_a = std::make_shared<std::string>();
    auto file_b = std::make_shared<std::string>();
    auto backend = std::make_shared<std::string>("exact");
    auto output = std::make_shared<std::string>();
    corr->add_option("a", *file_a)->required();
    corr->add_option("b", *file_b)->required();
    corr->add_option("--backend", *backend, "exact|fft");
    corr->add_option("-o,--output", *output, "table JSON path")->required();
    corr->callback([=, &exit_code, &out] {
        const ExponentArray a = load_array(*file_a);
        const ExponentArray b = load_array(*file_b);
        Backend be;
        if (*backend == "exact") be = Backend::Exact;
        else if (*backend == "fft") be = Backend::Fft;
        else throw CLI::ValidationError("--backend must be exact or fft");
        const CorrelationTable table = cross_correlation(a, b, be);
        atomic_write(*output, table_to_json(table).dump() + "\n");
        out << "correlated " << shape_string(table.shape()) << " (" << *backend << "), "
            << table.nonzero_shifts().size() << " nonzero shifts\n"
            << "wrote " << *output << "\n";
        exit_code = 0;
    });
}

// ---- render ------------------------------------------------------------

void add_render(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* render = app.add_subcommand("render", "Write a PGM/PPM image of a 2-D array");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto palette = std::make_shared<std::string>("grayscale");
    auto format = std::make_shared<std::string>("pgm");
    auto scale = std::make_shared<std::int64_t>(1);
    render->add_option("input", *input)->required();
    render->add_option("-o,--output", *output)->required();
    render->add_option("--palette", *palette, "grayscale|hue");
    render->add_option("--format", *format, "pgm|ppm");
    render->add_option("--scale", *scale, "pixels per cell");
    render->callback([=, &exit_code, &out] {
        RenderSpec spec;
        if (*palette == "grayscale") spec.palette = Palette::Grayscale;
        else if (*palette == "hue") spec.palette = Palette::Hue;
        else throw CLI::ValidationError("--palette must be grayscale or hue");
        if (*format == "pgm") spec.format = ImageFormat::Pgm;
        else if (*format == "ppm") spec.format = ImageFormat::Ppm;
        else throw CLI::ValidationError("--format must be pgm or ppm");
        spec.scale = *scale;
        const ExponentArray a = load_array(*input);
        const std::string bytes = render_image(a, spec);
        atomic_write(*output, bytes);
        out << "rendered " << shape_string(a.shape()) << " at scale " << spec.scale << "\n"
            << "wrote " << *output << "\n";
        exit_code = 0;
    });
}

// ---- bench -------------------------------------------------------------

void add_bench(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* bench = app.add_subcommand("bench", "Time the exact and fft correlation backends");
    auto shape_str = std::make_shared<std::string>();
    auto modulus = std::make_shared<std::int64_t>(0);
    auto reps = std::make_shared<int>(3);
    auto cap = std::make_shared<std::int64_t>(std::int64_t{1} << 22);
    auto output = std::make_shared<std::string>();
    bench->add_option("--shape", *shape_str, "comma-separated extents, e.g. 72,72")->required();
    bench->add_option("--modulus", *modulus)->required();
    bench->add_option("--reps", *reps);
    bench->add_option("--cap", *cap, "volume cap");
    bench->add_option("-o,--output", *output, "optional JSON report path");
    bench->callback([=, &exit_code, &out] {
        Shape shape;
        std::stringstream ss(*shape_str);
        std::string part;
        while (std::getline(ss, part, ',')) shape.push_back(std::stoll(part));
        const BenchReport report = bench_correlation(shape, *modulus, *reps, *cap);
        const auto mean = [](const std::vector<double>& xs) {
            return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
        };
        out << "shape " << shape_string(report.shape) << ", modulus " << report.modulus
            << ", volume " << report.volume << ", " << report.repetitions << " reps\n"
            << "exact: " << mean(report.exact_seconds) << " s/rep\n"
            << "fft:   " << mean(report.fft_seconds) << " s/rep\n"
            << "max |exact - fft| = " << report.max_deviation
            << " (bound " << report.deviation_bound << ")\n";
        if (!output->empty()) {
            atomic_write(*output, bench_to_json(report).dump(2) + "\n");
            out << "wrote " << *output << "\n";
        }
        exit_code = 0;
    });
}

// ---- sweep -------------------------------------------------------------

struct Range {
    std::int64_t lo = 0, hi = -1;
    bool set() const { return hi >= lo; }
};

Range parse_range(const std::string& text) {
    Range r;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoll(text);
    } else {
        r.lo = std::stoll(text.substr(0, colon));
        r.hi = std::stoll(text.substr(colon + 1));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range upper bound below lower bound");
    return r;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

void add_sweep(CLI::App& app, int& exit_code, std::ostream& out) {
    auto* sweep = app.add_subcommand("sweep", "Run a parameter grid and write a CSV of verdicts");
    auto family = std::make_shared<std::string>();
    auto d_str = std::make_shared<std::string>();
    auto m_str = std::make_shared<std::string>();
    auto n_str = std::make_shared<std::string>();
    auto k_str = std::make_shared<std::string>();
    auto r_str = std::make_shared<std::string>();
    auto p = std::make_shared<std::int64_t>(1);
    auto allow_odd = std::make_shared<bool>(false);
    auto all_divisors = std::make_shared<bool>(false);
    auto output = std::make_shared<std::string>();
    sweep->add_option("--family", *family, "construction family")->required();
    sweep->add_option("--d", *d_str, "value or lo:hi");
    sweep->add_option("--m", *m_str, "value or lo:hi");
    sweep->add_option("--n", *n_str, "value or lo:hi");
    sweep->add_option("--k", *k_str, "value or lo:hi");
    sweep->add_option("--r", *r_str, "value or lo:hi");
    sweep->add_option("--p", *p, "coprime parameter");
    sweep->add_flag("--allow-odd", *allow_odd);
    sweep->add_flag("--all-divisors", *all_divisors, "one row per valid divisor >= 2");
    sweep->add_option("-o,--output", *output, "CSV path")->required();
    sweep->callback([=, &exit_code, &out] {
        struct Combo {
            std::string params;
            std::function<ExponentArray()> build;
            std::int64_t natural_divisor;
        };
        std::vector<Combo> combos;
        const Range dr = d_str->empty() ? Range{} : parse_range(*d_str);
        const Range mr = m_str->empty() ? Range{} : parse_range(*m_str);
        const Range nr = n_str->empty() ? Range{} : parse_range(*n_str);
        const Range kr = k_str->empty() ? Range{} : parse_range(*k_str);
        const Range rr = r_str->empty() ? Range{} : parse_range(*r_str);
        const auto each = [](const Range& r, const std::function<void(std::int64_t)>& fn) {
            if (!r.set()) throw CLI::ValidationError("missing a parameter range for this family");
            for (std::int64_t v = r.lo; v <= r.hi; ++v) fn(v);
        };
        const std::int64_t pv = *p;
        const bool odd_ok = *allow_odd;
        if (*family == "chu") {
            each(mr, [&](std::int64_t m) {
                combos.push_back({"m=" + std::to_string(m), [m, pv] { return chu(m, pv); }, 0});
            });
        } else if (*family == "frank") {
            each(nr, [&](std::int64_t n) {
                combos.push_back({"n=" + std::to_string(n), [n] { return frank(n); }, n});
            });
        } else if (*family == "milewski") {
            each(mr, [&](std::int64_t m) {
                each(kr, [&](std::int64_t k) {
                    combos.push_back({"m=" + std::to_string(m) + ";k=" + std::to_string(k),
                                      [m, k, pv] { return milewski(m, k, pv); }, ipow(m, k)});
                });
            });
        } else if (*family == "blake_floor") {
            each(mr, [&](std::int64_t m) {
                each(nr, [&](std::int64_t n) {
                    each(kr, [&](std::int64_t k) {
                        combos.push_back({"m=" + std::to_string(m) + ";n=" + std::to_string(n) +
                                              ";k=" + std::to_string(k),
                                          [m, n, k] { return blake_floor(m, n, k); }, 2});
                    });
                });
            });
        } else if (*family == "gfrank") {
            each(dr, [&](std::int64_t d) {
                each(mr, [&](std::int64_t m) {
                    combos.push_back({"d=" + std::to_string(d) + ";m=" + std::to_string(m),
                                      [d, m] { return gfrank(d, m); }, d});
                });
            });
        } else if (*family == "floor2d") {
            each(dr, [&](std::int64_t d) {
                combos.push_back({"d=" + std::to_string(d),
                                  [d, odd_ok] { return floor2d(d, odd_ok); }, d});
            });
        } else if (*family == "floor_nd") {
            each(dr, [&](std::int64_t d) {
                each(mr, [&](std::int64_t m) {
                    combos.push_back({"d=" + std::to_string(d) + ";m=" + std::to_string(m),
                                      [d, m, odd_ok] { return floor_nd(d, m, odd_ok); }, d});
                });
            });
        } else if (*family == "gmilewski") {
            each(rr, [&](std::int64_t r) {
                each(kr, [&](std::int64_t k) {
                    each(mr, [&](std::int64_t m) {
                        combos.push_back({"r=" + std::to_string(r) + ";k=" + std::to_string(k) +
                                              ";m=" + std::to_string(m),
                                          [r, k, m, pv, odd_ok] { return gmilewski(r, k, m, pv, odd_ok); },
                                          ipow(r, k)});
                    });
                });
            });
        } else {
            throw CLI::ValidationError("unknown family: " + *family);
        }

        std::string csv = "family,params,shape,modulus,volume,perfect,witness,divisor,gaop_holds,error\n";
        for (const Combo& combo : combos) {
            csv += *family + "," + combo.params + ",";
            try {
                const ExponentArray a = combo.build();
                const PerfectionResult perf = is_perfect(a);
                csv += shape_string(a.shape()) + "," + std::to_string(a.modulus()) + "," +
                       std::to_string(a.volume()) + "," + (perf.perfect ? "true" : "false") + "," +
                       (perf.witness ? shift_string(*perf.witness) : "");
                std::vector<std::int64_t> divisors;
                if (*all_divisors) {
                    const std::int64_t max_extent =
                        *std::min_element(a.shape().begin(), a.shape().end());
                    for (std::int64_t d = 2; d <= max_extent; ++d) {
                        bool ok = true;
                        for (std::int64_t extent : a.shape()) ok = ok && extent % d == 0;
                        if (ok) divisors.push_back(d);
                    }
                } else if (combo.natural_divisor >= 2) {
                    divisors.push_back(combo.natural_divisor);
                }
                if (divisors.empty()) {
                    csv += ",,,\n";
                    continue;
                }
                std::string dcol, gcol;
                for (std::size_t i = 0; i < divisors.size(); ++i) {
                    if (i) { dcol += '|'; gcol += '|'; }
                    dcol += std::to_string(divisors[i]);
                    gcol += gaop_check(a, divisors[i]).holds ? "true" : "false";
                }
                csv += "," + dcol + "," + gcol + ",\n";
            } catch (const std::exception& e) {
                std::string msg = e.what();
                for (char& c : msg)
                    if (c == ',' || c == '\n') c = ';';
                csv += ",,,,,,," + msg + "\n";
            }
        }
        atomic_write(*output, csv);
        out << "swept " << combos.size() << " parameter combinations\n"
            << "wrote " << *output << "\n";
        exit_code = 0;
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"perfect n-dimensional arrays over roots of unity"};
    app.require_subcommand(1);
    int exit_code = 2;
    add_generate(app, exit_code, out);
    add_verify(app, exit_code, out);
    add_correlate(app, exit_code, out);
    add_render(app, exit_code, out);
    add_bench(app, exit_code, out);
    add_sweep(app, exit_code, out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace perfarr::cli
