#include "gqt/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <thread>

#include "gqt/json_io.hpp"

namespace gqt::cli {

namespace {

struct RunConfig {
    std::string command;
    std::uint32_t p = 2;
    std::uint32_t k = 2;
    std::string modulus;
    std::size_t dim = 0;  // 0: command default
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "json";
    bool deterministic = false;
    bool parallel = false;
    bool guard_override = false;
    int verbosity = 0;

    // command specific
    std::string alpha = "1";
    std::string beta = "0";
    bool char2 = false;
    std::string message;
    std::size_t trials = 10;
    std::size_t unitaries = 0;
    std::string state;
    std::string hex;
    std::optional<std::size_t> bit_count;
    std::uint32_t theory_i = 1;
    std::uint32_t theory_m = 2;
    std::uint32_t theory_p = 2;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            out.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
        } catch (const std::exception&) {
            throw UsageError("bad modulus coefficient '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '[' || c == ']' || c == ';') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

FieldSpec field_of(const RunConfig& cfg) {
    if (cfg.modulus.empty()) return build_field(cfg.p, cfg.k);
    return build_field(cfg.p, cfg.k, parse_modulus(cfg.modulus));
}

const std::uint64_t& require_seed(const RunConfig& cfg) {
    if (!cfg.seed) throw UsageError(cfg.command + " is randomized and needs --seed");
    return *cfg.seed;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json header(const RunConfig& cfg, const std::optional<FieldSpec>& spec) {
    Json config{{"command", cfg.command}, {"p", cfg.p}, {"k", cfg.k}};
    config["modulus"] = cfg.modulus.empty() ? Json(nullptr) : Json(parse_modulus(cfg.modulus));
    config["dim"] = cfg.dim ? Json(cfg.dim) : Json(nullptr);
    config["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
    config["format"] = cfg.format;
    config["deterministic"] = cfg.deterministic;
    config["parallel"] = cfg.parallel;
    config["guard_override"] = cfg.guard_override;
    config["verbosity"] = cfg.verbosity;
    if (cfg.command == "theory") config["theory"] = {{"i", cfg.theory_i}, {"m", cfg.theory_m}, {"pp", cfg.theory_p}};
    if (cfg.command == "teleport") {
        config["alpha"] = cfg.alpha;
        config["beta"] = cfg.beta;
        config["char2"] = cfg.char2;
    }
    if (cfg.command == "sdc") config["message"] = cfg.message;
    if (cfg.command == "verify") config["unitaries"] = cfg.unitaries;
    if (cfg.command == "geocode roundtrip") config["trials"] = cfg.trials;
    if (cfg.command == "geocode encode") config["state"] = cfg.state;
    if (cfg.command == "geocode decode") config["hex"] = cfg.hex;
    Json h{{"tool", "gqt"}, {"config", config}};
    h["field"] = spec ? to_json(*spec) : Json(nullptr);
    if (!cfg.deterministic) h["timestamp"] = utc_timestamp();
    return h;
}

EnumerationOptions enum_options(const RunConfig& cfg) {
    EnumerationOptions o;
    o.guard_override = cfg.guard_override;
    o.threads = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    return o;
}

std::shared_ptr<const KernelGeometry> geometry(const RunConfig& cfg, const FieldSpec& spec, std::size_t dim) {
    return std::make_shared<const KernelGeometry>(enumerate_kernel(standard_form(spec, dim), enum_options(cfg)));
}

FieldVector parse_state(const FieldSpec& spec, const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception&) {
        // Semicolon-separated element list, e.g. "1;t;0;t+1".
        j = Json::array();
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = text.find(';', start);
            j.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    return vector_from_json(spec, j);
}

Json field_report(const FieldSpec& spec) {
    Json elements = Json::array();
    if (spec.order() <= 256) {
        for (const auto& x : spec.elements()) {
            Json e{{"coeffs", x.coeffs()}, {"text", x.to_string()}};
            if (spec.has_involution()) {
                e["conjugate"] = to_json(frobenius_involution(x));
                e["norm"] = to_json(norm(x));
            }
            elements.push_back(e);
        }
    }
    Json r{{"name", spec.name()}, {"order", spec.order()}, {"has_involution", spec.has_involution()}};
    if (spec.has_involution()) {
        r["subfield_order"] = spec.q();
        r["kappa"] = to_json(spec.kappa());
        r["kappa_squares_to_minus_one"] = kappa_squares_to_minus_one(spec);
    }
    r["elements"] = elements;
    return r;
}

Json geo_params_json(const GeoParams& params) {
    return Json{{"lines", params.lines}, {"eta", to_json(params.eta)}, {"seed", params.seed}};
}

struct Output {
    Json json;
    std::optional<std::string> text;  // CSV
};

Output execute(const RunConfig& cfg) {
    const std::string& c = cfg.command;

    if (c == "theory") {
        const auto d = theory_coordinates(cfg.theory_i, cfg.theory_m, cfg.theory_p);
        return {Json{{"header", header(cfg, d.field)}, {"result", to_json(d)}}, {}};
    }

    const FieldSpec spec = field_of(cfg);
    Json h = header(cfg, spec);

    if (c == "field") return {Json{{"header", h}, {"result", field_report(spec)}}, {}};

    if (c == "kernel enumerate") {
        const auto geom = enumerate_kernel(standard_form(spec, cfg.dim), enum_options(cfg));
        if (cfg.format == "csv") return {Json{}, catalog_csv(geom)};
        return {Json{{"header", h}, {"result", catalog_json(geom)}}, {}};
    }

    if (c == "verify") {
        const auto geom = geometry(cfg, spec, cfg.dim);
        Json r{{"point_count", geom->points.size()}, {"line_count", geom->lines.size()}};
        r["one_or_all"] = to_json(verify_one_or_all(*geom));
        if (cfg.unitaries > 0) {
            const auto seed = require_seed(cfg);
            Json runs = Json::array();
            std::size_t escapes = 0;
            for (std::size_t i = 0; i < cfg.unitaries; ++i) {
                const auto rep = unitary_action(random_unitary(geom->form, seed + i), *geom);
                escapes += rep.point_escapes + rep.line_escapes;
                runs.push_back({{"seed", seed + i},
                                {"point_escapes", rep.point_escapes},
                                {"line_escapes", rep.line_escapes},
                                {"points_permuted", rep.points_permuted},
                                {"lines_permuted", rep.lines_permuted}});
            }
            r["unitary_action"] = {{"count", cfg.unitaries}, {"escapes", escapes}, {"runs", runs}};
        }
        return {Json{{"header", h}, {"result", r}}, {}};
    }

    if (c == "teleport") {
        const auto seed = require_seed(cfg);
        const auto a = parse_element(spec, cfg.alpha);
        const auto b = parse_element(spec, cfg.beta);
        const auto t = cfg.char2 ? teleport_char2(a, b, seed) : teleport(a, b, seed);
        return {Json{{"header", h}, {"result", to_json(t)}}, {}};
    }

    if (c == "sdc") {
        if (cfg.message.empty()) throw UsageError("sdc needs --message");
        return {Json{{"header", h}, {"result", to_json(sdc_run(cfg.message, spec))}}, {}};
    }

    if (c == "noclone scan" || c == "nodelete scan") {
        const auto kind = c == "noclone scan" ? ObstructionKind::Cloning : ObstructionKind::Deleting;
        Json r = to_json(scan_pairs(spec, cfg.dim, kind));
        if (kind == ObstructionKind::Cloning) {
            Json rows = Json::array();
            for (const auto& row : f2_orthogonal_special_case()) {
                Json jr{{"order", row.order}, {"p", row.p}, {"k", row.k}, {"all_idempotent", row.all_idempotent}};
                jr["counterexample"] = row.counterexample ? to_json(*row.counterexample) : Json(nullptr);
                rows.push_back(jr);
            }
            r["idempotence"] = rows;
        }
        return {Json{{"header", h}, {"result", r}}, {}};
    }

    if (c.rfind("geocode", 0) == 0) {
        const auto seed = require_seed(cfg);
        const auto geom = geometry(cfg, spec, 4);
        const auto params = agree_parameters(geom, seed);
        Json r{{"parameters", geo_params_json(params)}};
        if (c == "geocode roundtrip") {
            r["report"] = to_json(geo_roundtrip(params, cfg.trials, seed));
        } else if (c == "geocode encode") {
            if (cfg.state.empty()) throw UsageError("geocode encode needs --state");
            const auto x = parse_state(spec, cfg.state);
            r["state"] = to_json(x);
            r["ciphertext"] = to_json(geo_encode(x, params));
        } else {
            if (cfg.hex.empty()) throw UsageError("geocode decode needs --hex");
            const std::size_t bits = cfg.bit_count.value_or(3 * 4 * spec.k() * coefficient_bits(spec));
            GeoCiphertext ct;
            ct.bits = hex_to_bits(cfg.hex, bits);
            ct.points = deserialize_points(ct.bits, spec);
            r["ciphertext"] = to_json(ct);
            r["decoded"] = to_json(geo_decode(ct, params).coords());
        }
        return {Json{{"header", h}, {"result", r}}, {}};
    }

    throw UsageError("unknown command '" + c + "'");
}

void add_common(CLI::App& app, RunConfig& cfg) {
    app.add_option("--p", cfg.p, "characteristic");
    app.add_option("--k", cfg.k, "extension degree");
    app.add_option("--modulus", cfg.modulus, "monic modulus, low degree first, e.g. 2,2,1");
    app.add_option("--dim", cfg.dim, "state space dimension");
    app.add_option("--seed", cfg.seed, "64-bit seed (required by randomized commands)");
    app.add_option("--out", cfg.out_path, "write the report to FILE instead of stdout");
    app.add_option("--format", cfg.format, "json or csv (csv: kernel catalogs only)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--deterministic", cfg.deterministic, "omit the timestamp from report headers");
    app.add_flag("--parallel", cfg.parallel, "partition kernel enumeration over all cores");
    app.add_flag("--guard-override", cfg.guard_override, "allow enumeration past dim 4, q 5");
    app.add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact general quantum theory over finite fields", "gqt"};
    app.fallthrough();
    app.require_subcommand(1);
    add_common(app, cfg);

    auto* field = app.add_subcommand("field", "field parameters, elements, conjugates and norms");

    auto* kernel = app.add_subcommand("kernel", "quantum kernel polar space");
    kernel->require_subcommand(1);
    auto* kernel_enum = kernel->add_subcommand("enumerate", "point and line catalog");

    auto* verify = app.add_subcommand("verify", "incidence axioms and unitary action on the kernel");
    verify->add_option("--unitaries", cfg.unitaries, "number of seeded unitaries to apply");

    auto* teleport_cmd = app.add_subcommand("teleport", "teleportation transcript");
    teleport_cmd->add_option("--alpha", cfg.alpha, "coefficient of |0>");
    teleport_cmd->add_option("--beta", cfg.beta, "coefficient of |1>");
    teleport_cmd->add_flag("--char2", cfg.char2, "characteristic-2 variant");

    auto* sdc_cmd = app.add_subcommand("sdc", "super-dense coding transcript");
    sdc_cmd->add_option("--message", cfg.message, "two classical bits")->required();

    auto* geocode = app.add_subcommand("geocode", "polarity-based geometric coding");
    geocode->require_subcommand(1);
    auto* geo_rt = geocode->add_subcommand("roundtrip", "seeded batch of encode, transmit, decode");
    geo_rt->add_option("--trials", cfg.trials, "number of random states");
    auto* geo_enc = geocode->add_subcommand("encode", "encode one state to a hex bitstream");
    geo_enc->add_option("--state", cfg.state, "JSON element list or 'a;b;c;d'")->required();
    auto* geo_dec = geocode->add_subcommand("decode", "decode a hex bitstream");
    geo_dec->add_option("--hex", cfg.hex, "bitstream from geocode encode")->required();
    geo_dec->add_option("--bits", cfg.bit_count, "bit count (default: three points)");

    auto* noclone = app.add_subcommand("noclone", "cloning obstruction");
    noclone->require_subcommand(1);
    auto* noclone_scan = noclone->add_subcommand("scan", "classify every pair of states");
    auto* nodelete = app.add_subcommand("nodelete", "deleting obstruction");
    nodelete->require_subcommand(1);
    auto* nodelete_scan = nodelete->add_subcommand("scan", "classify every pair of states");

    auto* theory = app.add_subcommand("theory", "coordinates (i, m, p) of a finite modal theory");
    theory->add_option("--i", cfg.theory_i, "scalars GF(p^(2i))");
    theory->add_option("--m", cfg.theory_m, "state space dimension");
    theory->add_option("--pp", cfg.theory_p, "prime");

    for (auto* sub : {kernel, geocode, noclone, nodelete}) sub->fallthrough();
    for (auto* sub : {field, kernel_enum, verify, teleport_cmd, sdc_cmd, geo_rt, geo_enc, geo_dec, noclone_scan,
                      nodelete_scan, theory}) {
        sub->fallthrough();
    }

    std::vector<std::string> storage{"gqt"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    const std::vector<std::pair<CLI::App*, const char*>> commands{
        {field, "field"},           {kernel_enum, "kernel enumerate"}, {verify, "verify"},
        {teleport_cmd, "teleport"}, {sdc_cmd, "sdc"},                  {geo_rt, "geocode roundtrip"},
        {geo_enc, "geocode encode"}, {geo_dec, "geocode decode"},      {noclone_scan, "noclone scan"},
        {nodelete_scan, "nodelete scan"}, {theory, "theory"}};
    for (const auto& [sub, name] : commands) {
        if (sub->parsed()) cfg.command = name;
    }
    if (const char* env = std::getenv("GQT_GUARD_OVERRIDE"); env && std::string(env) == "1") cfg.guard_override = true;
    if (cfg.dim == 0) {
        if (cfg.command == "kernel enumerate" || cfg.command == "verify" || cfg.command.rfind("geocode", 0) == 0) {
            cfg.dim = 4;
        } else if (cfg.command == "noclone scan" || cfg.command == "nodelete scan") {
            cfg.dim = 2;
        }
    }
    if (cfg.command.rfind("geocode", 0) == 0 && cfg.dim != 4) {
        err << "error: geocode works in dimension 4\n";
        return 2;
    }
    if (cfg.format == "csv" && cfg.command != "kernel enumerate") {
        err << "error: --format csv is only available for kernel enumerate\n";
        return 2;
    }

    Output result;
    try {
        if (cfg.verbosity > 0) err << "gqt: running " << cfg.command << "\n";
        result = execute(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error& e) {
        Json j{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.detail()}}}};
        out << j.dump(2) << "\n";
        return 1;
    }

    const std::string text = result.text ? *result.text : result.json.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

}  // namespace gqt::cli
