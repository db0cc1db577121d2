#include "rootstab/cli.hpp"

#include "rootstab/error.hpp"
#include "rootstab/io.hpp"
#include "rootstab/support.hpp"
#include "rootstab/verify.hpp"
#include "rootstab/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rootstab {

namespace {

using json = nlohmann::ordered_json;

struct Cell {
    std::string exact;
    std::string approx; // decimal, table mode only
};

Cell cell(const Rat& r) {
    Cell c{rat_str(r), ""};
    if (denominator(r) != 1) c.approx = rat_approx(r);
    return c;
}

Cell cell(const Slope& s) {
    if (s.is_infinite()) return {"inf", ""};
    return cell(s.value());
}

Cell cell(const std::string& s) { return {s, ""}; }
Cell cell(const char* s) { return {s, ""}; }
Cell cell(bool b) { return {b ? "true" : "false", ""}; }

struct ResultDoc {
    std::vector<std::pair<std::string, Cell>> fields;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    json machine;

    ResultDoc(const std::string& command, const std::string& config_name) {
        machine["command"] = command;
        machine["config"] = config_name;
    }
    void field(const std::string& key, const Cell& c) {
        fields.emplace_back(key, c);
        machine[key] = c.exact;
    }
    void field_json(const std::string& key, const Cell& shown, const json& value) {
        fields.emplace_back(key, shown);
        machine[key] = value;
    }
    void table(std::vector<std::string> columns) {
        header = std::move(columns);
        machine["rows"] = json::array();
    }
    void row(const std::vector<Cell>& cells) {
        rows.push_back(cells);
        json obj;
        for (std::size_t i = 0; i < cells.size() && i < header.size(); ++i)
            obj[header[i]] = cells[i].exact;
        machine["rows"].push_back(obj);
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void render(const ResultDoc& doc, const std::string& format, std::ostream& out) {
    if (format == "machine") {
        out << doc.machine.dump() << "\n";
        return;
    }
    if (format == "csv") {
        for (const auto& [key, c] : doc.fields)
            out << csv_escape(key) << "," << csv_escape(c.exact) << "\n";
        if (!doc.header.empty()) {
            for (std::size_t i = 0; i < doc.header.size(); ++i)
                out << (i ? "," : "") << csv_escape(doc.header[i]);
            out << "\n";
            for (const auto& row : doc.rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_escape(row[i].exact);
                out << "\n";
            }
        }
        return;
    }
    // table
    std::size_t key_width = 0;
    for (const auto& [key, _] : doc.fields) key_width = std::max(key_width, key.size());
    for (const auto& [key, c] : doc.fields) {
        out << std::left << std::setw(static_cast<int>(key_width) + 2) << key << c.exact;
        if (!c.approx.empty()) out << "  (~ " << c.approx << ")";
        out << "\n";
    }
    if (!doc.header.empty()) {
        if (!doc.fields.empty()) out << "\n";
        std::vector<std::size_t> width(doc.header.size());
        auto shown = [](const Cell& c) {
            return c.approx.empty() ? c.exact : c.exact + " (~ " + c.approx + ")";
        };
        for (std::size_t i = 0; i < doc.header.size(); ++i) width[i] = doc.header[i].size();
        for (const auto& row : doc.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], shown(row[i]).size());
        for (std::size_t i = 0; i < doc.header.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << doc.header[i];
        out << "\n";
        for (const auto& row : doc.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << std::left << std::setw(static_cast<int>(width[i]) + 2) << shown(row[i]);
            out << "\n";
        }
    }
}

ChargeParams params_from(const RootStackConfig& cfg, const std::string& t_text) {
    if (t_text.empty()) return ChargeParams::geometric(cfg);
    return ChargeParams::free_t(cfg, parse_rat(t_text));
}

std::vector<Rat> parse_rat_list(const std::string& text, std::size_t expect,
                                const std::string& what) {
    std::vector<Rat> out;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    }
    if (out.empty()) out.assign(expect, Rat(0));
    if (out.size() != expect)
        fail(Errc::DimensionMismatch, what + ": expected " + std::to_string(expect) + " entries");
    return out;
}

DestabBounds parse_bounds(const std::string& text) {
    if (text.empty())
        fail(Errc::UnboundedRequest, "destab needs --bounds cg=<int>,den=<int>,num=<rat>");
    DestabBounds b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(Errc::ParseError, "bounds entries look like key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "cg") b.max_cg = std::stoi(value);
        else if (key == "den") b.ch2_den = std::stoi(value);
        else if (key == "num") b.ch2_abs = parse_rat(value);
        else if (key == "rank") b.rank_cap = std::stoi(value);
        else fail(Errc::ParseError, "unknown bounds key '" + key + "'");
    }
    b.validate();
    return b;
}

json class_json(const RootStackConfig& cfg, const NumClass& v) {
    return json::parse(emit_class(cfg, v));
}

Cell class_cell(const RootStackConfig& cfg, const NumClass& v) {
    return cell(emit_class(cfg, v));
}

void warn_integrality(const RootStackConfig& cfg, const NumClass& v, std::ostream& err) {
    for (const auto& w : integrality_warnings(cfg, v)) err << "warning: " << w << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tilt-stability calculator on root stacks over surfaces"};
    app.name("rootstab");

    std::string config_path, format = "table", csv_path;
    app.add_option("-c,--config", config_path, "config document (JSON)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "machine"}))
        ->capture_default_str();
    app.add_option("--csv", csv_path, "write wall samples as CSV to this path");
    app.require_subcommand(1);

    std::string t_text, a_text, class_a, class_b, eps_text, eps_prime_text, bounds_text;
    std::vector<std::string> class_list;
    std::string lattice_text = "ordinary", form_path;
    int opt_d = 0, opt_m = 0, samples = 50;
    unsigned long long seed = 20240801ULL;

    CLI::App* cmd_charge = app.add_subcommand("charge", "central charge of a class");
    cmd_charge->add_option("--class", class_a, "class document")->required();
    cmd_charge->add_option("-t", t_text, "free-mode t (rational); omit for t = H^2/2");

    CLI::App* cmd_orb = app.add_subcommand("orbcharge", "deformed charge of an orbifold class");
    cmd_orb->add_option("--class", class_a, "class document with sectors")->required();
    cmd_orb->add_option("-t", t_text, "free-mode t (rational)");
    cmd_orb->add_option("--eps", eps_text, "comma-separated epsilon_k (default zeros)");
    cmd_orb->add_option("--epsprime", eps_prime_text, "comma-separated epsilon'_k");

    CLI::App* cmd_wall = app.add_subcommand("wall", "numerical wall between two classes");
    cmd_wall->add_option("--class", class_list, "two class documents")->expected(2);
    cmd_wall->add_option("--samples", samples, "points for the CSV sample file")
        ->capture_default_str();

    CLI::App* cmd_onwall = app.add_subcommand("onwall", "exact wall membership at (s, t)");
    cmd_onwall->add_option("--class", class_list, "two class documents")->expected(2);
    std::string s_text;
    cmd_onwall->add_option("-s", s_text, "s coordinate (rational)")->required();
    cmd_onwall->add_option("-t", t_text, "t coordinate (rational, positive)")->required();

    CLI::App* cmd_destab = app.add_subcommand("destab", "bounded destabilizer enumeration");
    cmd_destab->add_option("--class", class_a, "target class document")->required();
    cmd_destab->add_option("-t", t_text, "free-mode t (rational)");
    cmd_destab->add_option("--bounds", bounds_text, "cg=<int>,den=<int>,num=<rat>[,rank=<int>]");

    CLI::App* cmd_exp = app.add_subcommand("exampleP", "ideal-sheaf family destabilization report");
    cmd_exp->add_option("-d", opt_d, "H-degree")->required();
    cmd_exp->add_option("-m", opt_m, "number of points")->required();
    cmd_exp->add_option("-t", t_text, "free-mode t (rational)");

    CLI::App* cmd_const = app.add_subcommand("constants", "closed-form support constants");
    cmd_const->add_option("-t", t_text, "t (rational)")->required();
    cmd_const->add_option("-a", a_text, "window parameter a (rational)")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the cross-module invariant suite");
    cmd_verify->add_option("--seed", seed, "RNG seed")->capture_default_str();

    CLI::App* cmd_lv = app.add_subcommand("largevolume", "large-volume comparison of two classes");
    cmd_lv->add_option("--class", class_list, "two class documents")->expected(2);

    CLI::App* cmd_ratio = app.add_subcommand("supportratio", "norm-to-charge ratio scan");
    cmd_ratio->add_option("--class", class_list, "orbifold class documents")->expected(-1);
    cmd_ratio->add_option("-t", t_text, "free-mode t (rational)");

    CLI::App* cmd_kernel = app.add_subcommand("kernelcheck", "quadratic form on ker Z");
    cmd_kernel->add_option("-t", t_text, "free-mode t (rational)");
    cmd_kernel->add_option("--lattice", lattice_text, "ordinary|cr")
        ->check(CLI::IsMember({"ordinary", "cr"}))
        ->capture_default_str();
    cmd_kernel->add_option("--form", form_path, "JSON matrix file (default: discriminant form)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<std::string> argv_store = args;
    std::vector<char*> argv;
    std::string prog = "rootstab";
    argv.push_back(prog.data());
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    bool verify_failed = false;
    try {
        RootStackConfig cfg = parse_config_file(config_path);
        ResultDoc doc("", cfg.name);

        if (cmd_charge->parsed()) {
            doc = ResultDoc("charge", cfg.name);
            ChargeParams p = params_from(cfg, t_text);
            ParsedClass pc = parse_class(cfg, class_a);
            warn_integrality(cfg, pc.cls, err);
            Charge z = charge(cfg, pc.cls, p);
            doc.field_json("class", class_cell(cfg, pc.cls), class_json(cfg, pc.cls));
            doc.field("t", cell(p.t_effective(cfg)));
            doc.field("re", cell(z.re));
            doc.field("im", cell(z.im));
            doc.field("mu_sigma", cell(sigma_slope_of(z)));
        } else if (cmd_orb->parsed()) {
            doc = ResultDoc("orbcharge", cfg.name);
            ChargeParams p = params_from(cfg, t_text);
            CRClass v = as_cr(cfg, parse_class(cfg, class_a));
            auto eps = parse_rat_list(eps_text, cfg.n - 1, "--eps");
            auto eps_prime = parse_rat_list(eps_prime_text, cfg.n - 1, "--epsprime");
            Charge z = charge_deformed(cfg, v, p, eps, eps_prime);
            doc.field_json("class", cell(emit_class(cfg, v)), json::parse(emit_class(cfg, v)));
            doc.field("t", cell(p.t_effective(cfg)));
            doc.field("re", cell(z.re));
            doc.field("im", cell(z.im));
            doc.field("mu_sigma", cell(sigma_slope_of(z)));
        } else if (cmd_wall->parsed()) {
            doc = ResultDoc("wall", cfg.name);
            NumClass v = parse_class(cfg, class_list.at(0)).cls;
            NumClass w = parse_class(cfg, class_list.at(1)).cls;
            WallLocus locus = wall_locus(cfg, v, w, cfg.b_class(), cfg.h_class());
            doc.field("kind", cell(wall_kind_name(locus.kind)));
            if (locus.has_curve) {
                doc.field("q_ss", cell(locus.q_ss));
                doc.field("q_s", cell(locus.q_s));
                doc.field("q_0", cell(locus.q_0));
                doc.field("disc", cell(locus.disc));
                doc.field("apex_s", cell(locus.apex_s));
                doc.field("apex_t", cell(locus.apex_t));
            }
            if (locus.degenerate_all) {
                doc.field("degenerate_s", cell("all"));
            } else if (!locus.degenerate_s.empty()) {
                std::string joined;
                for (const auto& s : locus.degenerate_s)
                    joined += (joined.empty() ? "" : " ") + rat_str(s);
                doc.field("degenerate_s", cell(joined));
            }
            if (locus.kind == WallKind::Curve && !csv_path.empty()) {
                std::ofstream file(csv_path);
                if (!file) fail(Errc::ParseError, "cannot write CSV to '" + csv_path + "'");
                file << "s,t\n";
                for (const auto& [s, t] : wall_samples(locus, samples))
                    file << rat_str(s) << "," << rat_str(t) << "\n";
                doc.field("csv", cell(csv_path));
            }
        } else if (cmd_onwall->parsed()) {
            doc = ResultDoc("onwall", cfg.name);
            NumClass v = parse_class(cfg, class_list.at(0)).cls;
            NumClass w = parse_class(cfg, class_list.at(1)).cls;
            Rat s = parse_rat(s_text), t = parse_rat(t_text);
            doc.field("s", cell(s));
            doc.field("t", cell(t));
            doc.field("on_wall", cell(on_wall(cfg, v, w, cfg.b_class(), cfg.h_class(), s, t)));
        } else if (cmd_destab->parsed()) {
            doc = ResultDoc("destab", cfg.name);
            ChargeParams p = params_from(cfg, t_text);
            NumClass v = parse_class(cfg, class_a).cls;
            warn_integrality(cfg, v, err);
            DestabBounds bounds = parse_bounds(bounds_text);
            auto candidates = destabilizer_candidates(cfg, v, p, bounds);
            doc.field_json("class", class_cell(cfg, v), class_json(cfg, v));
            doc.field("t", cell(p.t_effective(cfg)));
            doc.field("count", cell(std::to_string(candidates.size())));
            doc.table({"ch0", "ch1", "cg", "ch2", "mu_sigma"});
            for (const auto& w : candidates) {
                std::string coords;
                for (const auto& x : w.ch1.coords)
                    coords += (coords.empty() ? "" : " ") + rat_str(x);
                doc.row({cell(w.ch0), cell(coords), cell(w.ch1.cg), cell(w.ch2),
                         cell(sigma_slope(cfg, w, p))});
            }
        } else if (cmd_exp->parsed()) {
            doc = ResultDoc("exampleP", cfg.name);
            ChargeParams p = params_from(cfg, t_text);
            ExamplePReport rep = example_p_report(cfg, opt_d, opt_m, p);
            doc.field_json("E", class_cell(cfg, rep.e_cls), class_json(cfg, rep.e_cls));
            doc.field_json("W", class_cell(cfg, rep.w_cls), class_json(cfg, rep.w_cls));
            doc.field("t", cell(p.t_effective(cfg)));
            doc.field("zE_re", cell(rep.z_e.re));
            doc.field("zE_im", cell(rep.z_e.im));
            doc.field("zW_re", cell(rep.z_w.re));
            doc.field("zW_im", cell(rep.z_w.im));
            doc.field("mu_E", cell(rep.mu_e));
            doc.field("mu_W", cell(rep.mu_w));
            doc.field("E_im_positive", cell(rep.e_im_positive));
            doc.field("destabilizes", cell(rep.destabilizes));
            if (rep.margin_defined) doc.field("margin", cell(rep.margin));
        } else if (cmd_const->parsed()) {
            doc = ResultDoc("constants", cfg.name);
            ConstantsLedger led = explicit_constants(cfg, parse_rat(t_text), parse_rat(a_text));
            doc.field("alpha", cell(led.alpha));
            doc.field("a2", cell(led.a2));
            doc.field("a1", cell(led.a1));
            doc.field("M2", cell(led.M2));
            doc.field("M7", cell(led.M7));
            doc.field("bC1", cell(led.bC1));
        } else if (cmd_verify->parsed()) {
            doc = ResultDoc("verify", cfg.name);
            auto results = run_verify(cfg, VerifyOptions{seed});
            std::size_t passed = 0;
            doc.table({"property", "status", "detail"});
            for (const auto& r : results) {
                if (r.pass) ++passed;
                doc.row({cell(r.name), cell(r.pass ? "pass" : "FAIL"), cell(r.detail)});
            }
            doc.field("passed", cell(std::to_string(passed) + "/" + std::to_string(results.size())));
            verify_failed = passed != results.size();
        } else if (cmd_lv->parsed()) {
            doc = ResultDoc("largevolume", cfg.name);
            NumClass v = parse_class(cfg, class_list.at(0)).cls;
            NumClass w = parse_class(cfg, class_list.at(1)).cls;
            Order o = large_volume_compare(cfg, v, w, cfg.b_class(), cfg.h_class());
            doc.field("order", cell(order_name(o)));
        } else if (cmd_ratio->parsed()) {
            doc = ResultDoc("supportratio", cfg.name);
            if (class_list.empty()) fail(Errc::ParseError, "supportratio needs --class inputs");
            ChargeParams p = params_from(cfg, t_text);
            std::vector<CRClass> samples_v;
            for (const auto& text : class_list) samples_v.push_back(as_cr(cfg, parse_class(cfg, text)));
            auto res = support_ratio(cfg, samples_v,
                                     [&](const CRClass& c) { return charge(cfg, c.base, p); });
            doc.field("ratio_sq", cell(res.ratio_sq));
            if (res.argmax) {
                doc.field("argmax_index", cell(std::to_string(*res.argmax)));
                doc.field_json("argmax_class", cell(emit_class(cfg, samples_v[*res.argmax])),
                               json::parse(emit_class(cfg, samples_v[*res.argmax])));
            }
        } else if (cmd_kernel->parsed()) {
            doc = ResultDoc("kernelcheck", cfg.name);
            ChargeParams p = params_from(cfg, t_text);
            LatticeChoice lattice =
                lattice_text == "cr" ? LatticeChoice::CR : LatticeChoice::Ordinary;
            QuadraticForm q;
            if (form_path.empty()) {
                q = delta_form(cfg);
                std::size_t dim = lattice_dim(cfg, lattice);
                while (q.gram.size() < dim) {
                    for (auto& row : q.gram) row.resize(dim, Rat(0));
                    q.gram.push_back(Vec(dim, Rat(0)));
                }
            } else {
                std::ifstream in(form_path);
                if (!in) fail(Errc::ParseError, "cannot open form file '" + form_path + "'");
                std::ostringstream buf;
                buf << in.rdbuf();
                json m = json::parse(relaxed_to_json(buf.str()), nullptr, false);
                if (m.is_discarded() || !m.is_array())
                    fail(Errc::ParseError, "form file must hold a JSON matrix");
                for (const auto& row : m) {
                    Vec r;
                    for (const auto& x : row)
                        r.push_back(x.is_string() ? parse_rat(x.get<std::string>())
                                                  : Rat(x.get<long long>()));
                    q.gram.push_back(std::move(r));
                }
            }
            auto res = kernel_form_check(cfg, q, p, lattice);
            doc.field("lattice", cell(lattice_text));
            doc.field("verdict", cell(kernel_verdict_name(res.verdict)));
            doc.field("kernel_dim", cell(std::to_string(res.kernel_dim)));
            if (!res.witness.empty()) {
                std::string joined;
                for (const auto& x : res.witness)
                    joined += (joined.empty() ? "" : " ") + rat_str(x);
                doc.field("witness", cell(joined));
            }
        }

        render(doc, format, out);
    } catch (const Error& e) {
        json error_doc;
        error_doc["error"] = errc_name(e.code());
        error_doc["message"] = e.what();
        if (format == "machine") err << error_doc.dump() << "\n";
        else err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json error_doc;
        error_doc["error"] = "InternalError";
        error_doc["message"] = e.what();
        if (format == "machine") err << error_doc.dump() << "\n";
        else err << "error: " << e.what() << "\n";
        return 1;
    }

    if (verify_failed) {
        err << (format == "machine" ? "{\"error\":\"VerifyFailed\"}" : "error: VerifyFailed") << "\n";
        return 1;
    }
    return 0;
}

} // namespace rootstab
