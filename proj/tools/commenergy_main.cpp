// commenergy: exact spectra and energies of commuting graphs of finite
// groups, with a verification harness for the published closed-form energy
// formulas of the supported families.
//
// Exit codes: 0 success, 1 internal inconsistency, 2 parse error,
//             3 order/dimension cap exceeded, 4 abelian input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "commenergy/energies.hpp"
#include "commenergy/verify.hpp"

using namespace commenergy;

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    f << text;
}

std::vector<long> parse_list(const std::string& csv) {
    std::vector<long> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(detail::parse_long(cur, "list entry"));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

std::string pretty_group(const FiniteGroup& g) {
    GroupFacts f = group_facts(g);
    std::string s;
    s += "group:              " + g.family.descriptor() + "\n";
    s += "order:              " + std::to_string(f.order) + "\n";
    s += "|Z(G)|:             " + std::to_string(f.center_size) + "\n";
    s += "centralizers:       " + std::to_string(f.cent_count) + "\n";
    s += "Pr(G):              " + rat_str(f.pr) + "\n";
    s += "central quotient:   " + f.quotient.str() + " (order " + std::to_string(f.order / f.center_size) +
         ")\n";
    return s;
}

std::string table_csv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += csv_escape(cells[i]);
    }
    return s + "\n";
}

int run_table(const std::string& which, const std::string& format, const std::string& out_file, long max_order) {
    struct Row {
        std::string name, descriptor;
        std::array<std::string, 3> computed;
        std::array<std::string, 3> printed;
        std::array<std::string, 3> status;
    };
    std::vector<Row> rows;
    mpq_class tol(mpz_class(1), zpow(10, 10));

    auto add_formula_rows = [&](const std::string& fid) {
        for (const auto& pg : formula(fid).per_group) {
            FiniteGroup g = build(GroupFamilySpec::parse(pg.descriptors.front()), max_order);
            EnergyReport rep = energy_report(g, tol);
            Row r;
            r.name = pg.display;
            r.descriptor = pg.descriptors.front();
            const std::array<const ExactOrInterval*, 3> comp{&rep.E, &rep.LE, &rep.LEplus};
            for (int i = 0; i < 3; ++i) {
                auto c = compare_value("", "", pg.printed[static_cast<size_t>(i)], *comp[static_cast<size_t>(i)]);
                r.computed[static_cast<size_t>(i)] = c.computed;
                r.printed[static_cast<size_t>(i)] = c.predicted;
                r.status[static_cast<size_t>(i)] = status_name(c.status);
            }
            rows.push_back(r);
        }
    };

    if (which == "planar") {
        add_formula_rows("F19");
    } else if (which == "toroidal") {
        add_formula_rows("F20");
    } else if (which == "order16") {
        static const std::vector<std::pair<std::string, std::string>> names{
            {"Z2xD8", "product:inner=dihedral:m=4,k=2"}, {"Z2xQ8", "product:inner=dicyclic:m=2,k=2"},
            {"M16", "modular16"},                        {"Z4:Z4", "metacyclic:m=4,n=2"},
            {"D8*Z4", "pauli16"},                        {"SG(16,3)", "sg16"}};
        for (const auto& [name, desc] : names) {
            FiniteGroup g = build(GroupFamilySpec::parse(desc), max_order);
            EnergyReport rep = energy_report(g, tol);
            Row r;
            r.name = name;
            r.descriptor = desc;
            const std::array<const ExactOrInterval*, 3> comp{&rep.E, &rep.LE, &rep.LEplus};
            for (int i = 0; i < 3; ++i) {
                auto c = compare_value("", "", PrintedValue::exact(18), *comp[static_cast<size_t>(i)]);
                r.computed[static_cast<size_t>(i)] = c.computed;
                r.printed[static_cast<size_t>(i)] = "18";
                r.status[static_cast<size_t>(i)] = status_name(c.status);
            }
            rows.push_back(r);
        }
    } else if (which == "superintegral-census") {
        std::string text;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        std::string csv = "group,adjacencyIntegral,laplacianIntegral,signlessIntegral,superIntegral\n";
        for (const auto& r : super_integral_census(default_witness_pool(), max_order)) {
            if (format == "json") {
                nlohmann::ordered_json j;
                j["group"] = r.descriptor;
                j["adjacencyIntegral"] = r.adjacency_integral;
                j["laplacianIntegral"] = r.laplacian_integral;
                j["signlessIntegral"] = r.signless_integral;
                j["superIntegral"] = r.super;
                arr.push_back(j);
            } else if (format == "csv") {
                csv += table_csv_row({r.descriptor, r.adjacency_integral ? "1" : "0",
                                      r.laplacian_integral ? "1" : "0", r.signless_integral ? "1" : "0",
                                      r.super ? "1" : "0"});
            } else {
                text += (r.super ? "[super]   " : "[      ]  ") + r.descriptor + "  A=" +
                        (r.adjacency_integral ? "int" : "irr") + " L=" + (r.laplacian_integral ? "int" : "irr") +
                        " Q=" + (r.signless_integral ? "int" : "irr") + "\n";
            }
        }
        if (format == "json")
            emit(arr.dump(2) + "\n", out_file);
        else if (format == "csv")
            emit(csv, out_file);
        else
            emit(text, out_file);
        return 0;
    } else {
        throw ParseError("unknown table selector '" + which + "'");
    }

    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["group"] = r.name;
            j["descriptor"] = r.descriptor;
            for (int i = 0; i < 3; ++i) {
                const char* names[3] = {"E", "LE", "LEplus"};
                nlohmann::ordered_json q;
                q["computed"] = r.computed[static_cast<size_t>(i)];
                q["printed"] = r.printed[static_cast<size_t>(i)];
                q["status"] = r.status[static_cast<size_t>(i)];
                j[names[i]] = q;
            }
            arr.push_back(j);
        }
        emit(arr.dump(2) + "\n", out_file);
    } else if (format == "csv") {
        std::string csv =
            "group,descriptor,E.computed,E.printed,E.status,LE.computed,LE.printed,LE.status,"
            "LEplus.computed,LEplus.printed,LEplus.status\n";
        for (const auto& r : rows)
            csv += table_csv_row({r.name, r.descriptor, r.computed[0], r.printed[0], r.status[0], r.computed[1],
                                  r.printed[1], r.status[1], r.computed[2], r.printed[2], r.status[2]});
        emit(csv, out_file);
    } else {
        std::string text;
        for (const auto& r : rows) {
            text += r.name + " (" + r.descriptor + ")\n";
            const char* names[3] = {"E  ", "LE ", "LE+"};
            for (int i = 0; i < 3; ++i)
                text += "  " + std::string(names[i]) + " computed " + r.computed[static_cast<size_t>(i)] +
                        "  printed " + r.printed[static_cast<size_t>(i)] + "  [" +
                        r.status[static_cast<size_t>(i)] + "]\n";
        }
        emit(text, out_file);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commuting-graph spectra, energies and formula verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "pretty";
    std::string out_file;
    std::string tolerance_text = "1e-9";
    long max_order = kDefaultOrderCap;
    int threads = 1;
    app.add_option("--format", format, "output format: pretty|json|csv|dot")->envname("COMMENERGY_FORMAT");
    app.add_option("--out", out_file, "write output to file")->envname("COMMENERGY_OUT");
    app.add_option("--tolerance", tolerance_text, "enclosure width for irrational energies")
        ->envname("COMMENERGY_TOLERANCE");
    app.add_option("--max-order", max_order, "group order cap")->envname("COMMENERGY_MAX_ORDER");
    app.add_option("--threads", threads, "worker threads for verify/table scans")->envname("COMMENERGY_THREADS");

    std::string group_desc;
    auto* cmd_group = app.add_subcommand("group", "build a group and print its summary or table");
    cmd_group->add_option("descriptor", group_desc, "group descriptor, e.g. dihedral:m=6")->required();

    std::string energy_desc;
    auto* cmd_energy = app.add_subcommand("energy", "energies of the commuting graph of a group");
    cmd_energy->add_option("descriptor", energy_desc, "group descriptor")->required();

    std::string graph_desc;
    auto* cmd_graph = app.add_subcommand("graph", "commuting graph export (dot or edge list)");
    cmd_graph->add_option("descriptor", graph_desc, "group descriptor")->required();

    bool verify_all = false;
    std::vector<std::string> verify_formulas;
    std::string verify_family;
    std::string z_list, q_list;
    auto* cmd_verify = app.add_subcommand("verify", "check printed formulas against direct computation");
    cmd_verify->add_flag("--all", verify_all, "scan the built-in witness pool");
    cmd_verify->add_option("--formula", verify_formulas, "restrict to formula ids (repeatable)");
    cmd_verify->add_option("--family", verify_family, "witness descriptor template");
    cmd_verify->add_option("--z", z_list, "comma list of center sizes to instantiate with --family");
    cmd_verify->add_option("--q", q_list, "comma list of field sizes (for gl2 witnesses)");

    std::string table_sel;
    auto* cmd_table = app.add_subcommand("table", "list-style result tables");
    cmd_table->add_option("selector", table_sel, "planar|toroidal|order16|superintegral-census")->required();

    auto* cmd_formulas = app.add_subcommand("formulas", "registry of printed formulas");
    auto* cmd_flist = cmd_formulas->add_subcommand("list", "list all registry entries");
    std::string eval_id;
    std::vector<std::string> eval_params;
    auto* cmd_feval = cmd_formulas->add_subcommand("eval", "evaluate a formula at parameters");
    cmd_feval->add_option("id", eval_id, "formula id, e.g. F4")->required();
    cmd_feval->add_option("params", eval_params, "bindings like m=5 z=2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        mpq_class tolerance = tolerance_parse(tolerance_text);

        if (*cmd_group) {
            FiniteGroup g = build(GroupFamilySpec::parse(group_desc), max_order);
            if (format == "json")
                emit(group_json(g).dump() + "\n", out_file);
            else
                emit(pretty_group(g), out_file);
        } else if (*cmd_energy) {
            FiniteGroup g = build(GroupFamilySpec::parse(energy_desc), max_order);
            EnergyReport rep = energy_report(g, tolerance);
            if (format == "json") {
                emit(rep.json().dump() + "\n", out_file);
            } else if (format == "csv") {
                emit("E,LE,LEplus,meanDegree,vertices,edges\n" + rep.E.csv() + "," + rep.LE.csv() + "," +
                         rep.LEplus.csv() + "," + rat_str(rep.meandeg) + "," + std::to_string(rep.vertices) +
                         "," + std::to_string(rep.edges) + "\n",
                     out_file);
            } else {
                std::string s;
                s += "group:        " + g.family.descriptor() + "\n";
                s += "vertices:     " + std::to_string(rep.vertices) + "\n";
                s += "edges:        " + std::to_string(rep.edges) + "\n";
                s += "mean degree:  " + rat_str(rep.meandeg) + "\n";
                s += "E:            " + rep.E.str() + "\n";
                s += "LE:           " + rep.LE.str() + "\n";
                s += "LE+:          " + rep.LEplus.str() + "\n";
                emit(s, out_file);
            }
        } else if (*cmd_graph) {
            FiniteGroup g = build(GroupFamilySpec::parse(graph_desc), max_order);
            CommutingGraph cg = commuting_graph(g);
            if (format == "json")
                emit(edges_json(cg).dump() + "\n", out_file);
            else
                emit(dot_export(cg), out_file);
        } else if (*cmd_verify) {
            ScanOptions opt;
            opt.formulas = verify_formulas;
            opt.threads = threads;
            opt.max_order = max_order;
            if (!verify_family.empty()) {
                auto instantiate = [&](const std::string& tmpl, const std::string& key, long v) {
                    if (tmpl == "suzuki2" && key == "z")
                        return "product:inner=suzuki2,k=" + std::to_string(v);
                    std::string sep = tmpl.find(':') == std::string::npos ? ":" : ",";
                    return tmpl + sep + key + "=" + std::to_string(v);
                };
                if (!z_list.empty())
                    for (long z : parse_list(z_list)) opt.descriptors.push_back(instantiate(verify_family, "z", z));
                else
                    opt.descriptors.push_back(verify_family);
            }
            if (!q_list.empty())
                for (long q : parse_list(q_list)) {
                    // factor q = p^n
                    long p = 0, n = 0, t = q;
                    for (long c = 2; c <= t; ++c)
                        if (t % c == 0) {
                            p = c;
                            n = 0;
                            while (t % c == 0) {
                                t /= c;
                                ++n;
                            }
                            break;
                        }
                    if (t != 1 || p == 0) throw ParseError("--q values must be prime powers");
                    opt.descriptors.push_back("gl2:p=" + std::to_string(p) + ",n=" + std::to_string(n));
                }
            ScanResult res = scan_all(opt);
            ErrataReport errata = errata_report(res.records);
            if (format == "csv") {
                emit(records_csv(res.records), out_file);
            } else if (format == "json") {
                nlohmann::ordered_json j;
                nlohmann::ordered_json recs = nlohmann::ordered_json::array();
                for (const auto& r : res.records) recs.push_back(record_json(r));
                j["records"] = recs;
                j["skipped"] = res.skipped;
                j["errata"] = errata_json(errata);
                emit(j.dump(2) + "\n", out_file);
            } else {
                std::string s;
                long mism = 0;
                for (const auto& r : res.records) {
                    for (const auto& c : r.checks) {
                        if (c.status == MatchStatus::Mismatch) ++mism;
                        s += r.descriptor + "  " + r.formula_id + "  " + c.quantity + ": " +
                             status_name(c.status) + "  printed " + c.predicted + "  computed " + c.computed;
                        if (!c.delta.empty()) s += "  (delta " + c.delta + ")";
                        s += "\n";
                    }
                    if (!r.spectrum_note.empty())
                        s += r.descriptor + "  " + r.formula_id + "  note: " + r.spectrum_note + "\n";
                }
                s += "---\nrecords: " + std::to_string(res.records.size()) +
                     ", mismatching quantities: " + std::to_string(mism) + "\n";
                for (const auto& n : errata.notes) s += "note: " + n + "\n";
                emit(s, out_file);
            }
        } else if (*cmd_table) {
            return run_table(table_sel, format, out_file, max_order);
        } else if (*cmd_formulas) {
            if (*cmd_flist) {
                if (format == "json") {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& f : registry()) {
                        nlohmann::ordered_json j;
                        j["id"] = f.id;
                        j["locus"] = f.locus;
                        j["summary"] = f.summary;
                        j["parameters"] = f.param_names;
                        j["setValued"] = f.set_valued;
                        j["annotations"] = f.annotations;
                        arr.push_back(j);
                    }
                    emit(arr.dump(2) + "\n", out_file);
                } else {
                    std::string s;
                    for (const auto& f : registry()) {
                        s += f.id + "  [" + f.locus + "]  " + f.summary + "\n";
                        for (const auto& a : f.annotations) s += "      note: " + a + "\n";
                    }
                    emit(s, out_file);
                }
            } else if (*cmd_feval) {
                FormulaParams params;
                for (const auto& kv : eval_params) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) throw ParseError("parameter binding must look like m=5");
                    params.kv[kv.substr(0, eq)] = detail::parse_long(kv.substr(eq + 1), kv.substr(0, eq));
                }
                FormulaPrediction pred = evaluate(eval_id, params);
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["id"] = pred.id;
                    j["params"] = pred.params.str();
                    const char* names[3] = {"E", "LE", "LEplus"};
                    for (int i = 0; i < 3; ++i) {
                        nlohmann::ordered_json q;
                        q["case"] = pred.case_labels[static_cast<size_t>(i)];
                        q["value"] = pred.values[static_cast<size_t>(i)].str();
                        j[names[i]] = q;
                    }
                    emit(j.dump() + "\n", out_file);
                } else {
                    std::string s = pred.id + " at " + pred.params.str() + "\n";
                    const char* names[3] = {"E  ", "LE ", "LE+"};
                    for (int i = 0; i < 3; ++i)
                        s += "  " + std::string(names[i]) + " = " + pred.values[static_cast<size_t>(i)].str() +
                             "   [case: " + pred.case_labels[static_cast<size_t>(i)] + "]\n";
                    emit(s, out_file);
                }
            } else {
                std::cerr << "formulas needs a subcommand (list | eval)\n";
                return 2;
            }
        }
        return 0;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const AbelianGroupError& e) {
        std::cerr << "abelian input: " << e.what() << "\n";
        return 4;
    } catch (const InapplicableFormula& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 2;
    } catch (const CaseGap& e) {
        std::cerr << "case gap: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
