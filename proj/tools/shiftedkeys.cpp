#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "shiftedkeys/fixtures.hpp"
#include "shiftedkeys/verify.hpp"

using namespace shiftedkeys;

namespace {

constexpr int kExitParse = 64;
constexpr int kExitDomain = 65;
constexpr int kExitGuard = 69;

std::string format_poly(const Poly& p, const std::string& fmt) {
    if (fmt == "json") return p.to_json();
    if (fmt == "latex") return p.to_latex();
    return p.to_text();
}

// expression grammar:
//   expr  ::= atom { op }
//   atom  ::= <basis> <index> | x^ <composition> | poly "<text form>"
//   op    ::= dd i | pi i | pibar i | ddb i | pib i | pibarb i
//           | pi_w <perm> | pib_w <perm> | sym n | symb n | beta0
// applied left to right to the running value.
std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    bool quoted = false;
    std::string acc;
    while (in >> tok) {
        if (!quoted && tok.front() == '"') {
            quoted = true;
            acc = tok.substr(1);
            if (!acc.empty() && acc.back() == '"') {
                acc.pop_back();
                out.push_back(acc);
                quoted = false;
            }
            continue;
        }
        if (quoted) {
            acc += " " + tok;
            if (!acc.empty() && acc.back() == '"') {
                acc.pop_back();
                out.push_back(acc);
                quoted = false;
            }
            continue;
        }
        out.push_back(tok);
    }
    if (quoted) throw ParseError("unterminated quote in expression");
    return out;
}

Poly eval_constructor(const std::string& name, const std::string& index) {
    if (name == "x^") return Poly::x_power([&] {
               WeakComposition c = WeakComposition::parse(index);
               return Exponents(c.parts().begin(), c.parts().end());
           }());
    if (name == "poly") return Poly::parse(index);
    auto id = basis_from_name(name);
    if (!id) throw ParseError("unknown basis '" + name + "'");
    switch (*id) {
        case BasisId::KEY: return key(WeakComposition::parse(index));
        case BasisId::ATOM: return atom(WeakComposition::parse(index));
        case BasisId::LASCOUX: return lascoux(WeakComposition::parse(index));
        case BasisId::LASCOUX_ATOM: return lascoux_atom(WeakComposition::parse(index));
        case BasisId::PKEY: return pkey(WeakComposition::parse(index));
        case BasisId::PATOM: return patom(WeakComposition::parse(index));
        case BasisId::QKEY: return qkey(WeakComposition::parse(index));
        case BasisId::QATOM: return qatom(WeakComposition::parse(index));
        case BasisId::PLASCOUX: return plascoux(WeakComposition::parse(index));
        case BasisId::PLASCOUX_ATOM: return plascoux_atom(WeakComposition::parse(index));
        case BasisId::LTILDE_O: return ltilde_o(WeakComposition::parse(index));
        case BasisId::QLASCOUX: return q_lascoux(WeakComposition::parse(index));
        case BasisId::SCHUBERT: return schubert(Permutation::parse(index));
        case BasisId::GROTHENDIECK: return grothendieck(Permutation::parse(index));
        case BasisId::INV_SCHUB_SP: return inv_schubert_sp(FpfInvolution::parse(index));
        case BasisId::INV_SCHUB_O: return inv_schubert_o(Involution::parse(index));
        case BasisId::GROTH_SP: return groth_sp(FpfInvolution::parse(index));
        case BasisId::GROTH_O_VEX: return groth_o_vex(Involution::parse(index));
    }
    throw ParseError("unknown basis '" + name + "'");
}

Poly eval_expression(const std::string& expr) {
    auto toks = tokenize(expr);
    if (toks.size() < 2) throw ParseError("expression needs a constructor and index");
    Poly value = eval_constructor(toks[0], toks[1]);
    std::size_t pos = 2;
    auto need_arg = [&](const char* what) -> std::string {
        if (pos >= toks.size()) throw ParseError(std::string(what) + " needs an argument");
        return toks[pos++];
    };
    while (pos < toks.size()) {
        std::string op = toks[pos++];
        if (op == "dd") value = apply(OperatorKind::DD, std::stoi(need_arg("dd")), value);
        else if (op == "pi") value = apply(OperatorKind::ISO, std::stoi(need_arg("pi")), value);
        else if (op == "pibar") value = apply(OperatorKind::BAR, std::stoi(need_arg("pibar")), value);
        else if (op == "ddb") value = apply(OperatorKind::DD_B, std::stoi(need_arg("ddb")), value);
        else if (op == "pib") value = apply(OperatorKind::ISO_B, std::stoi(need_arg("pib")), value);
        else if (op == "pibarb") value = apply(OperatorKind::BAR_B, std::stoi(need_arg("pibarb")), value);
        else if (op == "pi_w") value = apply_perm(OperatorKind::ISO, Permutation::parse(need_arg("pi_w")), value);
        else if (op == "pib_w") value = apply_perm(OperatorKind::ISO_B, Permutation::parse(need_arg("pib_w")), value);
        else if (op == "sym") value = symmetrize(OperatorKind::ISO, std::stoi(need_arg("sym")), value);
        else if (op == "symb") value = symmetrize(OperatorKind::ISO_B, std::stoi(need_arg("symb")), value);
        else if (op == "beta0") value = value.substitute_beta(0);
        else throw ParseError("unknown operator '" + op + "'");
    }
    return value;
}

template <class Index>
nlohmann::json expansion_json(const Expansion<Index>& ex, const std::function<std::string(const Index&)>& show) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : ex.terms) {
        nlohmann::json t;
        t["index"] = show(idx);
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    nlohmann::json j;
    j["terms"] = std::move(terms);
    j["residual"] = ex.residual.to_text();
    j["positive"] = ex.positive();
    return j;
}

template <class Index>
void print_expansion(const Expansion<Index>& ex, const std::string& basisname,
                     const std::function<std::string(const Index&)>& show, const std::string& fmt) {
    if (fmt == "json") {
        nlohmann::json j = expansion_json(ex, show);
        j["basis"] = basisname;
        std::cout << j.dump(2) << "\n";
        return;
    }
    bool first = true;
    for (const auto& [idx, c] : ex.terms) {
        std::string cs = c.str();
        if (!first) std::cout << " + ";
        first = false;
        if (cs == "1") std::cout << basisname << "[" << show(idx) << "]";
        else std::cout << "(" << cs << ")*" << basisname << "[" << show(idx) << "]";
    }
    if (first) std::cout << "0";
    std::cout << "\n";
    if (!ex.residual.is_zero()) std::cout << "residual: " << ex.residual.to_text() << "\n";
}

std::string cache_path() {
    const char* dir = std::getenv("SHIFTEDKEYS_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/groth_o_cache.json";
}

void load_disk_cache() {
    std::string path = cache_path();
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return;
    try {
        nlohmann::json j;
        in >> j;
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& r : j) rows.emplace_back(r.at("w").get<std::string>(), r.at("poly").dump());
        load_groth_o_cache(rows);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    }
}

void save_disk_cache() {
    std::string path = cache_path();
    if (path.empty()) return;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, pj] : dump_groth_o_cache()) {
        nlohmann::json r;
        r["w"] = w;
        r["poly"] = nlohmann::json::parse(pj);
        j.push_back(std::move(r));
    }
    std::ofstream out(path);
    out << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computer algebra for key, Schubert, Grothendieck, and shifted key/Lascoux families"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string fmt = "text";
    app.add_option("--format", fmt, "output format: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a basis element or operator expression");
    std::string eval_expr;
    int eval_vars = 0;
    cmd_eval->add_option("expr", eval_expr, "e.g. \"qkey 2,0,3,1\" or \"key 2,1 pi 1\"")->required();
    cmd_eval->add_option("--vars", eval_vars, "truncate the result to the first n variables");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "expand an expression over a basis");
    std::string expand_basis, expand_expr;
    bool all_solutions = false;
    std::size_t max_solutions = 8;
    cmd_expand->add_option("--basis", expand_basis, "key|atom|lascoux|lascoux_atom|schubert|grothendieck|pkey|qkey|plascoux")
        ->required();
    cmd_expand->add_option("expr", expand_expr)->required();
    cmd_expand->add_flag("--all-solutions", all_solutions, "collect every decomposition (search bases)");
    cmd_expand->add_option("--max-solutions", max_solutions);

    // sym
    auto* cmd_sym = app.add_subcommand("sym", "symmetric-function truncations");
    std::string sym_what, sym_index;
    int sym_vars = 0;
    cmd_sym->add_option("family", sym_what, "gp|gq|schur|schur_p|schur_q|g|stanley|gp_z|gq_z|expand-g")->required();
    cmd_sym->add_option("index", sym_index)->required();
    cmd_sym->add_option("--vars", sym_vars)->required();

    // hecke
    auto* cmd_hecke = app.add_subcommand("hecke", "0-Hecke machinery");
    std::string hecke_what, hecke_index;
    cmd_hecke->add_option("what", hecke_what, "bhf|bsp")->required();
    cmd_hecke->add_option("index", hecke_index)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a conjecture sweep");
    std::string conj, json_out;
    int max_n = 0;
    cmd_verify->add_option("conjecture", conj, "FKSS|FKSO|FKGS|SYM_UNIQUE|LEAD_Q|LEAD_P|VEX_CODE|ALPHA1_CONV|PKEY_SHAPE|GQ_Z1")
        ->required();
    cmd_verify->add_option("--max-n", max_n, "sweep bound (defaults per conjecture)");
    cmd_verify->add_option("--json", json_out, "write the report as json");

    // tables
    auto* cmd_tables = app.add_subcommand("tables", "regenerate the shifted-key expansion tables and diff them");
    bool tables_slow = false;
    cmd_tables->add_flag("--slow", tables_slow, "include the degree-20 multiplicity fact");

    // fixtures
    auto* cmd_fixtures = app.add_subcommand("fixtures", "write the stored fixtures to a directory");
    std::string fix_out = ".";
    cmd_fixtures->add_option("--out", fix_out);

    CLI11_PARSE(app, argc, argv);

    try {
        load_disk_cache();
        if (*cmd_eval) {
            Poly p = eval_expression(eval_expr);
            if (eval_vars > 0) p = p.truncate_vars(eval_vars);
            std::cout << format_poly(p, fmt) << "\n";
        } else if (*cmd_expand) {
            Poly p = eval_expression(expand_expr);
            auto show_comp = [](const WeakComposition& a) { return a.str(); };
            auto show_perm = [](const Permutation& w) { return w.str(); };
            if (expand_basis == "key") print_expansion<WeakComposition>(key_expand(p), "key", show_comp, fmt);
            else if (expand_basis == "atom") print_expansion<WeakComposition>(atom_expand(p), "atom", show_comp, fmt);
            else if (expand_basis == "lascoux") print_expansion<WeakComposition>(lascoux_expand(p), "lascoux", show_comp, fmt);
            else if (expand_basis == "lascoux_atom") print_expansion<WeakComposition>(lascoux_atom_expand(p), "lascoux_atom", show_comp, fmt);
            else if (expand_basis == "schubert") print_expansion<Permutation>(schubert_expand(p), "schubert", show_perm, fmt);
            else if (expand_basis == "grothendieck") print_expansion<Permutation>(grothendieck_expand(p), "grothendieck", show_perm, fmt);
            else if (expand_basis == "pkey" || expand_basis == "qkey" || expand_basis == "plascoux") {
                SearchFamily fam = expand_basis == "pkey" ? SearchFamily::PKEY
                                   : expand_basis == "qkey" ? SearchFamily::QKEY_2POW
                                                            : SearchFamily::PLASCOUX;
                SearchConfig cfg;
                cfg.all_solutions = all_solutions;
                cfg.max_solutions = max_solutions;
                SearchResult res = positive_search(p, fam, cfg);
                if (res.solutions.empty()) {
                    std::cerr << "no decomposition found (search exhausted: " << (res.exhausted ? "yes" : "no")
                              << ")\n";
                    return 1;
                }
                for (const auto& sol : res.solutions) print_expansion<WeakComposition>(sol, expand_basis, show_comp, fmt);
            } else {
                throw ParseError("unknown expansion basis '" + expand_basis + "'");
            }
        } else if (*cmd_sym) {
            SymmetricTruncation t;
            if (sym_what == "gp") t = gp(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "gq") t = gq(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "schur") t = schur(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "schur_p") t = schur_p(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "schur_q") t = schur_q(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "g") t = g_lambda(Partition::parse(sym_index), sym_vars);
            else if (sym_what == "stanley") t = stanley(Permutation::parse(sym_index), sym_vars);
            else if (sym_what == "gp_z") t = gp_z(FpfInvolution::parse(sym_index), sym_vars);
            else if (sym_what == "gq_z") t = gq_z_igrassmannian(Involution::parse(sym_index), sym_vars);
            else if (sym_what.rfind("expand-g", 0) == 0) {
                // expand-g <family rendered in index>: index is "gp:3,1" etc.
                auto colon = sym_index.find(':');
                if (colon == std::string::npos) throw ParseError("expand-g expects an index like gp:3,1");
                std::string fam = sym_index.substr(0, colon), idx = sym_index.substr(colon + 1);
                if (fam == "gp") t = gp(Partition::parse(idx), sym_vars);
                else if (fam == "gq") t = gq(Partition::parse(idx), sym_vars);
                else if (fam == "g") t = g_lambda(Partition::parse(idx), sym_vars);
                else throw ParseError("expand-g supports gp, gq, g");
                PartitionExpansion ex = g_basis_expand(t);
                print_expansion<Partition>(ex, "G", [](const Partition& l) { return l.str(); }, fmt);
                save_disk_cache();
                return 0;
            } else {
                throw ParseError("unknown symmetric family '" + sym_what + "'");
            }
            std::cout << format_poly(t.value, fmt) << "\n";
        } else if (*cmd_hecke) {
            if (hecke_what == "bhf") {
                for (const auto& a : bhf_enumerate(Permutation::parse(hecke_index))) std::cout << a.str() << "\n";
            } else if (hecke_what == "bsp") {
                for (const auto& w : bsp(FpfInvolution::parse(hecke_index))) std::cout << w.str() << "\n";
            } else {
                throw ParseError("unknown hecke command '" + hecke_what + "'");
            }
        } else if (*cmd_verify) {
            ConjectureId id = conjecture_from_name(conj);
            int bound = max_n > 0 ? max_n : default_bound(id);
            VerificationReport rep = run(id, bound);
            std::cout << rep.id << " bound " << rep.bound << ": " << rep.status << " (" << rep.params << ", "
                      << rep.seconds << "s)\n";
            for (const auto& [k, v] : rep.stats) std::cout << "  " << k << " = " << v << "\n";
            for (const auto& w : rep.witnesses) std::cout << "  witness: " << w << "\n";
            if (!json_out.empty()) {
                std::ofstream out(json_out);
                out << rep.to_json() << "\n";
            }
            save_disk_cache();
            if (rep.status == "counterexample") return 2;
            if (rep.status == "inconclusive") return 3;
            return 0;
        } else if (*cmd_tables) {
            TableReport rep = reproduce_tables(tables_slow);
            for (const auto& r : rep.generated_p) std::cout << r << "\n";
            std::cout << "\n";
            for (const auto& r : rep.generated_q) std::cout << r << "\n";
            if (!rep.ok) {
                for (const auto& m : rep.mismatches) std::cerr << "mismatch: " << m << "\n";
                return 1;
            }
            std::cerr << "tables match the stored fixtures (" << rep.seconds << "s)\n";
        } else if (*cmd_fixtures) {
            TableReport rep = reproduce_tables();
            if (!rep.ok) {
                for (const auto& m : rep.mismatches) std::cerr << "mismatch: " << m << "\n";
                return 1;
            }
            std::ofstream p(fix_out + "/table_pkey.tex");
            for (const auto& r : rep.generated_p) p << r << "\n";
            std::ofstream q(fix_out + "/table_qkey.tex");
            for (const auto& r : rep.generated_q) q << r << "\n";
            std::ofstream g(fix_out + "/groth_o_2143.json");
            g << fixtures::groth_o_2143().to_json() << "\n";
            std::cerr << "wrote table_pkey.tex, table_qkey.tex, groth_o_2143.json to " << fix_out << "\n";
        }
        save_disk_cache();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
