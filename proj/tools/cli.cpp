#include "cli.hpp"

#include "qcgeo/hwv.hpp"
#include "qcgeo/report.hpp"
#include "qcgeo/rep_dims.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#ifndef QCGEO_DEFAULT_DATA
#define QCGEO_DEFAULT_DATA "data"
#endif

namespace qcgeo::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

fs::path data_dir() {
    if (const char* env = std::getenv("QCGEO_DATA"); env && *env) return env;
    return QCGEO_DEFAULT_DATA;
}

// A path that does not exist but names a bundled model ("sphere_n1") resolves
// against the data directory.
fs::path resolve(const std::string& arg) {
    fs::path p(arg);
    if (fs::exists(p)) return p;
    if (!p.has_parent_path()) {
        fs::path bundled = data_dir() / p;
        if (!bundled.has_extension()) bundled += ".json";
        if (fs::exists(bundled)) return bundled;
    }
    throw IoError("cannot open '" + arg + "'");
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open '" + p.string() + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + p.string() + "'");
}

struct Outcome {
    int code = kComputed;
    std::string text;
};

Outcome validate_document(const std::string& document) {
    json diag;
    CoframeModel model;
    try {
        model = parse_model(document);
    } catch (const std::exception& e) {
        diag["valid"] = false;
        diag["stage"] = "parse";
        diag["error"] = e.what();
        return {kFailed, diag.dump(2) + "\n"};
    }
    const auto failures = validate_jacobi(model);
    diag["name"] = model.name;
    diag["valid"] = failures.empty();
    json list = json::array();
    for (const auto& f : failures) list.push_back({{"index", f.index + 1}, {"d_squared", render(f.residual)}});
    diag["failures"] = std::move(list);
    return {failures.empty() ? kComputed : kFailed, diag.dump(2) + "\n"};
}

Outcome report_document(const std::string& document, const std::string& format) {
    const GeometryReport r = build_report(parse_model(document));
    return {r.valid ? kComputed : kFailed, format == "text" ? report_to_text(r) : report_to_json(r)};
}

std::string pad(std::string s, std::size_t width) {
    // Column widths count code points so the Unicode module names line up.
    std::size_t cps = 0;
    for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
    if (cps < width) s.append(width - cps, ' ');
    return s;
}

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "+" : "") + std::to_string(xs[i]);
    return out;
}

Outcome repcheck(int max_n, const std::string& format) {
    Outcome o;
    json rows = json::array();
    std::ostringstream text;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& r : check_catalog(n)) {
            if (!r.equal) o.code = kFailed;
            std::int64_t total = 0;
            for (auto x : r.rhs) total += x;
            rows.push_back({{"id", r.id},
                            {"n", r.n},
                            {"l", r.l ? json(*r.l) : json(nullptr)},
                            {"lhs", r.lhs},
                            {"rhs", total},
                            {"pass", r.equal}});
            text << pad(r.id, 22) << " n=" << r.n << (r.l ? " l=" + std::to_string(*r.l) : "    ") << "  "
                 << std::setw(8) << r.lhs << " = " << join(r.rhs) << "  " << (r.equal ? "pass" : "FAIL") << "\n";
        }
    o.text = format == "json" ? rows.dump(2) + "\n" : text.str();
    return o;
}

Outcome hwv(int n, const std::string& format) {
    Outcome o;
    json rows = json::array();
    std::ostringstream text;
    if (n == 1) text << "note: n = 1 uses alpha3 = alpha1 and beta2 = beta1\n";
    for (const auto& c : verify_hwv_catalog(n)) {
        const bool ok = c.passed();
        if (!ok) o.code = kFailed;
        json row{{"id", c.id}, {"pass", ok}};
        text << (ok ? "pass  " : "FAIL  ") << c.id << "\n";
        if (!c.residual.is_zero()) {
            row["residual"] = render(c.residual);
            text << "      residual: " << render(c.residual) << "\n";
        }
        if (c.observed != c.expected) text << "      membership observed " << (c.observed ? "true" : "false") << "\n";
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        json doc{{"n", n}, {"aliased", n == 1}, {"checks", std::move(rows)}};
        o.text = doc.dump(2) + "\n";
    } else {
        o.text = text.str();
    }
    return o;
}

int batch(const fs::path& dir, const fs::path& out_dir, const std::string& format, std::ostream& out,
          std::ostream& err) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: '" + dir.string() + "'");
    fs::create_directories(out_dir);
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    const std::string ext = format == "text" ? ".txt" : ".json";
    std::vector<std::future<Outcome>> jobs;
    for (const auto& p : inputs)
        jobs.push_back(std::async(std::launch::async, [p, &out_dir, &format, &ext] {
            Outcome o;
            try {
                o = report_document(read_file(p), format);
                write_file(out_dir / (p.stem().string() + ext), o.text);
                o.text = o.code == kComputed ? "ok" : "invalid model";
            } catch (const IoError& e) {
                o = {kUsage, e.what()};
            } catch (const std::exception& e) {
                o = {kFailed, e.what()};
            }
            return o;
        }));

    int code = kComputed;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Outcome o = jobs[i].get();
        code = std::max(code, o.code);
        (o.code == kComputed ? out : err) << inputs[i].filename().string() << ": " << o.text << "\n";
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact quaternionic-contact geometry of left-invariant coframes", "qcgeo"};
    app.require_subcommand(1);

    std::string path, out_path, format, weights, dir;
    int n = 1, max_n = 4;
    const auto formats = CLI::IsMember({"json", "text"});

    auto* validate_cmd = app.add_subcommand("validate", "Parse a model and check d² = 0");
    validate_cmd->add_option("file", path, "Model JSON or bundled model name")->required();

    auto* report_cmd = app.add_subcommand("report", "Full geometry report");
    report_cmd->add_option("file", path, "Model JSON or bundled model name")->required();
    report_cmd->add_option("--out", out_path, "Write the report to this file");
    report_cmd->add_option("--format", format)->check(formats);

    auto* repdim_cmd = app.add_subcommand("repdim", "Dimension of V_{l1,...,lk} for Sp(n)");
    repdim_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    repdim_cmd->add_option("--weights", weights, "Comma-separated highest weight")->required();

    auto* repcheck_cmd = app.add_subcommand("repcheck", "Check the decomposition identity catalog");
    repcheck_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 12));
    repcheck_cmd->add_option("--format", format)->check(formats);

    auto* hwv_cmd = app.add_subcommand("hwv", "Verify the highest weight vector identities");
    hwv_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 3));
    hwv_cmd->add_option("--format", format)->check(formats);

    auto* batch_cmd = app.add_subcommand("batch", "Report every model in a directory");
    batch_cmd->add_option("dir", dir)->required();
    batch_cmd->add_option("--out", out_path)->required();
    batch_cmd->add_option("--format", format)->check(formats);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kComputed;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    // Reports default to JSON, tables to text.
    if (format.empty()) format = (*repcheck_cmd || *hwv_cmd) ? "text" : "json";

    try {
        Outcome o;
        if (*validate_cmd) {
            o = validate_document(read_file(resolve(path)));
        } else if (*report_cmd) {
            o = report_document(read_file(resolve(path)), format);
            if (!out_path.empty()) {
                write_file(out_path, o.text);
                o.text.clear();
            }
        } else if (*repdim_cmd) {
            const auto w = parse_weight_list(weights);
            o.text = std::to_string(weyl_dim({n, w, 0})) + "\n";
        } else if (*repcheck_cmd) {
            o = repcheck(max_n, format);
        } else if (*hwv_cmd) {
            o = hwv(n, format);
        } else {
            return batch(dir, out_path, format, out, err);
        }
        out << o.text;
        return o.code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
}

}  // namespace qcgeo::cli
