#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpack/catalog.hpp"
#include "latpack/io.hpp"
#include "latpack/modular.hpp"

using namespace latpack;

namespace {

// Every tabular subcommand fills one of these; --format picks the encoding.
// CSV carries the metadata as "# key=value" comment lines after "# schema=1",
// JSON carries the same keys as string fields next to "columns"/"rows".
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

void emit_table(const Table& t, bool as_json) {
    if (!as_json) {
        std::string out = "# schema=1\n";
        for (const auto& [k, v] : t.meta) out += "# " + k + "=" + v + "\n";
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out += (i ? "," : "") + t.columns[i];
        out += '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + csv_field(row[i]);
            out += '\n';
        }
        std::fputs(out.c_str(), stdout);
        return;
    }
    nlohmann::ordered_json j;
    j["schema"] = 1;
    for (const auto& [k, v] : t.meta) j[k] = v;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    std::fputs((j.dump(2) + "\n").c_str(), stdout);
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string rstr(const Rational& r) { return r.str(); }

void series_rows(Table& t, const QSeries& s, const std::string& tag = "") {
    for (const auto& [e, c] : s.terms()) {
        std::vector<std::string> row;
        if (!tag.empty()) row.push_back(tag);
        row.push_back(rstr(e));
        row.push_back(rstr(c));
        t.rows.push_back(std::move(row));
    }
}

Lattice resolve_lattice(const std::string& ref) {
    if (catalog_find(ref)) return catalog_lattice(ref);
    return load_lattice(ref);
}

PeriodicPacking resolve_packing(const std::string& ref) {
    if (catalog_find(ref)) return PeriodicPacking::from_lattice(catalog_lattice(ref));
    return load_packing(ref);
}

BinaryCode resolve_code(const std::string& ref) {
    if (ref == "best10") return best10();
    if (ref == "golay24") return golay24();
    if (ref == "qr18") return qr18();
    return load_code(ref);
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

std::vector<QSqrt2> parse_scalar_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<QSqrt2> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_scalar(tok));
    return out;
}

void density_rows(Table& t, int dim, const QSqrt2& cd_sq, double cd, double dens) {
    t.rows.push_back({"center_density_sq", format_scalar(cd_sq)});
    if (auto exact = qsqrt2_sqrt(cd_sq))
        t.rows.push_back({"center_density_exact", format_scalar(*exact)});
    t.rows.push_back({"center_density", fmt_double(cd)});
    t.rows.push_back({"density", fmt_double(dens)});
    t.rows.push_back({"fig3_ordinate", fmt_double(fig3_ordinate(dim, cd))});
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"exact lattice and sphere-packing toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    app.add_option("--format", format, "output encoding for tables (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));
    // Subcommand callbacks fire at the end of parse, after every option has
    // its final value, so reading the format lazily is safe.
    auto json_out = [&format] { return format == "json"; };
    EnumOptions opts;
    app.add_option("--nodes", opts.node_budget, "enumeration node budget (default 1e9)");
    app.add_option("--memory", opts.memory_budget_bytes,
                   "enumeration memory budget in bytes (default 2 GiB)");

    int rc = 0;

    // catalog ------------------------------------------------------------
    auto* cat = app.add_subcommand("catalog", "named lattices with stored invariants");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "one row per entry")->callback([&] {
        Table t;
        t.columns = {"name", "dim", "det", "min_norm", "kissing", "summary"};
        for (const CatalogEntry& e : lattice_catalog())
            t.rows.push_back({e.name, std::to_string(e.dim), format_scalar(e.det),
                              format_scalar(e.min_norm), std::to_string(e.kissing), e.summary});
        emit_table(t, json_out());
    });
    {
        auto* show = cat->add_subcommand("show", "print one entry as a lattice file");
        auto name = std::make_shared<std::string>();
        show->add_option("name", *name, "catalog entry")->required();
        show->callback([&, name] { write_or_print(lattice_to_json(catalog_lattice(*name)), ""); });
    }
    {
        auto* verify = cat->add_subcommand("verify", "recompute det, minimum and kissing number");
        auto names = std::make_shared<std::vector<std::string>>();
        verify->add_option("names", *names, "entries to check (default: all)");
        verify->callback([&, names] {
            std::vector<const CatalogEntry*> todo;
            if (names->empty())
                for (const CatalogEntry& e : lattice_catalog()) todo.push_back(&e);
            else
                for (const std::string& n : *names) {
                    const CatalogEntry* e = catalog_find(n);
                    if (!e) throw PreconditionError("unknown catalog entry " + n);
                    todo.push_back(e);
                }
            Table t;
            t.columns = {"name", "det_ok", "min_ok", "kissing_ok", "status"};
            bool budget = false, mismatch = false;
            for (const CatalogEntry* e : todo) {
                try {
                    CatalogCheck c = catalog_verify(*e, opts);
                    if (!c.ok()) mismatch = true;
                    t.rows.push_back({e->name, c.det_ok ? "1" : "0", c.min_ok ? "1" : "0",
                                      c.kissing_ok ? "1" : "0", c.ok() ? "ok" : "mismatch"});
                } catch (const ResourceError&) {
                    budget = true;
                    t.rows.push_back({e->name, "0", "0", "0", "budget"});
                }
            }
            emit_table(t, json_out());
            rc = budget ? 3 : (mismatch ? 1 : 0);
        });
    }

    // invariants ---------------------------------------------------------
    {
        auto* inv = app.add_subcommand("invariants", "exact invariants of a lattice or packing");
        auto ref = std::make_shared<std::string>();
        inv->add_option("input", *ref, "catalog name or file")->required();
        inv->callback([&, ref] {
            PeriodicPacking p = resolve_packing(*ref);
            Table t;
            t.meta = {{"name", p.name()}};
            t.columns = {"quantity", "value"};
            if (p.offsets().size() == 1) {
                const Lattice& l = p.base();
                DensityInfo di = density_info(l, opts);
                t.rows.push_back({"dim", std::to_string(l.dim())});
                t.rows.push_back({"det", format_scalar(l.determinant())});
                t.rows.push_back({"min_norm", format_scalar(di.min_norm_sq)});
                t.rows.push_back({"kissing", std::to_string(kissing_number(l, opts))});
                density_rows(t, l.dim(), di.center_density_sq, di.center_density, di.density);
            } else {
                PackingInvariants pi = packing_invariants(p, opts);
                t.rows.push_back({"dim", std::to_string(p.dim())});
                t.rows.push_back({"cosets", std::to_string(pi.cosets)});
                t.rows.push_back({"min_dist_sq", format_scalar(pi.min_dist_sq)});
                t.rows.push_back({"max_touching", std::to_string(pi.max_touching)});
                density_rows(t, p.dim(), pi.center_density_sq, pi.center_density, pi.density);
            }
            emit_table(t, json_out());
        });
    }

    // theta / coordseq / shadow -------------------------------------------
    {
        auto* th = app.add_subcommand("theta", "theta series coefficients below a cutoff");
        auto ref = std::make_shared<std::string>();
        auto cutoff = std::make_shared<int>(8);
        th->add_option("input", *ref, "catalog name or file")->required();
        th->add_option("--cutoff", *cutoff, "norms covered strictly below this (default 8)")
            ->check(CLI::PositiveNumber);
        th->callback([&, ref, cutoff] {
            Lattice l = resolve_lattice(*ref);
            QSeries s = theta_series(l, *cutoff, opts);
            Table t;
            t.meta = {{"name", l.name()}, {"cutoff", std::to_string(*cutoff)}};
            t.columns = {"exponent", "coefficient"};
            series_rows(t, s);
            emit_table(t, json_out());
        });
    }
    {
        auto* cs = app.add_subcommand("coordseq", "contact-graph coordination sequence");
        auto ref = std::make_shared<std::string>();
        auto steps = std::make_shared<int>(6);
        cs->add_option("input", *ref, "catalog name or file")->required();
        cs->add_option("--steps", *steps, "graph distance to walk out to (default 6)")
            ->check(CLI::NonNegativeNumber);
        cs->callback([&, ref, steps] {
            Lattice l = resolve_lattice(*ref);
            std::vector<std::uint64_t> seq = coordination_sequence(l, *steps, opts);
            Table t;
            t.meta = {{"name", l.name()}};
            t.columns = {"step", "count"};
            for (std::size_t i = 0; i < seq.size(); ++i)
                t.rows.push_back({std::to_string(i), std::to_string(seq[i])});
            emit_table(t, json_out());
        });
    }
    {
        auto* sh = app.add_subcommand("shadow", "shadow series of a unimodular lattice");
        auto ref = std::make_shared<std::string>();
        auto cutoff = std::make_shared<int>(8);
        sh->add_option("input", *ref, "catalog name or file")->required();
        sh->add_option("--cutoff", *cutoff, "norms covered strictly below this (default 8)")
            ->check(CLI::PositiveNumber);
        sh->callback([&, ref, cutoff] {
            Lattice l = resolve_lattice(*ref);
            ShadowDescription d = shadow(l, *cutoff, opts);
            std::string rep;
            for (std::size_t i = 0; i < d.coset_rep.size(); ++i)
                rep += (i ? " " : "") + rstr(d.coset_rep[i]);
            Table t;
            t.meta = {{"name", l.name()},
                      {"cutoff", std::to_string(*cutoff)},
                      {"coset", rep}};
            t.columns = {"exponent", "coefficient"};
            series_rows(t, d.series);
            emit_table(t, json_out());
        });
    }

    // bounds / nonexist / modular ------------------------------------------
    {
        auto* bd = app.add_subcommand("bounds", "minimal-norm bounds for unimodular lattices");
        auto maxdim = std::make_shared<int>(48);
        bd->add_option("--max-dim", *maxdim, "largest dimension listed (default 48)")
            ->check(CLI::PositiveNumber);
        bd->callback([&, maxdim] {
            Table t;
            t.columns = {"n", "legacy", "odd", "even"};
            for (int n = 1; n <= *maxdim; ++n)
                t.rows.push_back({std::to_string(n), std::to_string(legacy_bound(n)),
                                  std::to_string(extremal_bound(n, false)),
                                  n % 8 == 0 ? std::to_string(extremal_bound(n, true)) : ""});
            emit_table(t, json_out());
        });
    }
    {
        auto* ne = app.add_subcommand(
            "nonexist", "shadow obstruction for an odd unimodular lattice of given minimum");
        auto dim = std::make_shared<int>(0);
        auto mu = std::make_shared<int>(0);
        auto cutoff = std::make_shared<int>(8);
        ne->add_option("--dim", *dim, "dimension")->required()->check(CLI::PositiveNumber);
        ne->add_option("--min-norm", *mu, "minimal norm to test")
            ->required()
            ->check(CLI::PositiveNumber);
        ne->add_option("--cutoff", *cutoff, "coefficients inspected strictly below this")
            ->check(CLI::PositiveNumber);
        ne->callback([&, dim, mu, cutoff] {
            NonexistenceCertificate c = nonexistence_certificate(*dim, *mu, *cutoff, opts);
            Table t;
            t.meta = {{"dim", std::to_string(*dim)},
                      {"min_norm", std::to_string(*mu)},
                      {"verdict", c.impossible() ? "impossible" : "inconclusive"},
                      {"reason", c.reason},
                      {"free_parameters", std::to_string(c.free_parameters)}};
            if (c.offending) {
                t.meta.push_back({"offending_exponent", rstr(c.offending->first)});
                t.meta.push_back({"offending_coefficient", rstr(c.offending->second)});
            }
            t.columns = {"series", "exponent", "coefficient"};
            series_rows(t, c.theta, "theta");
            series_rows(t, c.shadow_series, "shadow");
            emit_table(t, json_out());
        });
    }
    {
        auto* md = app.add_subcommand("modular", "similarity of a lattice onto its dual");
        auto ref = std::make_shared<std::string>();
        auto nscale = std::make_shared<long long>(0);
        auto isodual = std::make_shared<bool>(false);
        md->add_option("input", *ref, "catalog name or file")->required();
        md->add_option("--N", *nscale, "norm multiplier of the similarity");
        md->add_flag("--isodual", *isodual, "equivalence with the dual, no rescaling");
        md->callback([&, ref, nscale, isodual] {
            if ((*nscale > 0) == *isodual)
                throw CLI::ValidationError("modular", "give exactly one of --N and --isodual");
            Lattice l = resolve_lattice(*ref);
            Table t;
            t.meta = {{"name", l.name()}};
            if (*isodual) {
                t.meta.push_back({"isodual", isodual_check(l, opts) ? "true" : "false"});
                t.columns = {"row", "coords"};
            } else {
                std::optional<IMat> u = n_modular_check(l, Int(*nscale), opts);
                t.meta.push_back({"N", std::to_string(*nscale)});
                t.meta.push_back({"similar", u ? "true" : "false"});
                t.columns = {"row", "coords"};
                if (u)
                    for (int i = 0; i < l.dim(); ++i) {
                        std::string coords;
                        for (int j = 0; j < l.dim(); ++j)
                            coords += (j ? " " : "") + u->at(i, j).str();
                        t.rows.push_back({std::to_string(i), coords});
                    }
            }
            emit_table(t, json_out());
        });
    }

    // construct ------------------------------------------------------------
    auto* con = app.add_subcommand("construct", "build packings and lattices from codes and layers");
    con->require_subcommand(1);
    {
        auto* a = con->add_subcommand("a", "code scaled into 2Z^n with codeword offsets");
        auto code = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto as_lattice = std::make_shared<bool>(false);
        a->add_option("--code", *code, "best10, golay24, qr18 or a code file")->required();
        a->add_option("--name", *name, "name for the result");
        a->add_option("-o,--output", *out, "write to a file instead of stdout");
        a->add_flag("--lattice", *as_lattice, "emit a lattice (linear codes only)");
        a->callback([&, code, name, out, as_lattice] {
            BinaryCode c = resolve_code(*code);
            if (*as_lattice)
                write_or_print(lattice_to_json(construction_a_lattice(c, *name)), *out);
            else
                write_or_print(packing_to_json(construction_a(c, *name)), *out);
        });
    }
    {
        auto* b = con->add_subcommand("bstar", "two-parity-class point set over a code pair");
        auto bref = std::make_shared<std::string>();
        auto cref = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        b->add_option("--b", *bref, "first code")->required();
        b->add_option("--c", *cref, "second code; c.(1+b) must vanish for all pairs")->required();
        b->add_option("--name", *name, "name for the result");
        b->add_option("-o,--output", *out, "write to a file instead of stdout");
        b->callback([&, bref, cref, name, out] {
            write_or_print(
                packing_to_json(construction_bstar(resolve_code(*bref), resolve_code(*cref), *name)),
                *out);
        });
    }
    {
        auto* lg = con->add_subcommand("leech-golay", "Leech lattice glued over the Golay code");
        auto out = std::make_shared<std::string>();
        lg->add_option("-o,--output", *out, "write to a file instead of stdout");
        lg->callback([&, out] { write_or_print(lattice_to_json(leech_from_golay()), *out); });
    }
    {
        auto* ll = con->add_subcommand("leech-lorentzian",
                                       "Leech lattice as w-perp/w in the even Lorentzian lattice");
        auto out = std::make_shared<std::string>();
        ll->add_option("-o,--output", *out, "write to a file instead of stdout");
        ll->callback([&, out] { write_or_print(lattice_to_json(leech_from_lorentzian()), *out); });
    }
    {
        auto* dp = con->add_subcommand("dplus", "D_n with the half-integer deep-hole translate");
        auto dim = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        dp->add_option("--dim", *dim, "dimension")->required()->check(CLI::PositiveNumber);
        dp->add_option("-o,--output", *out, "write to a file instead of stdout");
        dp->callback([&, dim, out] { write_or_print(packing_to_json(d_plus(*dim)), *out); });
    }
    {
        auto* d9 = con->add_subcommand("d9plus", "the sliding family D9 u D9 + ((1/2)^8, theta/2)");
        auto theta = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        d9->add_option("--theta", *theta, "rational slide parameter, e.g. 1/3")->required();
        d9->add_option("-o,--output", *out, "write to a file instead of stdout");
        d9->callback([&, theta, out] {
            QSqrt2 v = parse_scalar(*theta);
            if (!v.is_rational()) throw PreconditionError("theta must be rational");
            write_or_print(packing_to_json(d9_theta_plus(v.rat)), *out);
        });
    }
    {
        auto* st = con->add_subcommand("stack", "extend a lattice by one layer over a hole");
        auto base = std::make_shared<std::string>();
        auto hole = std::make_shared<std::string>();
        auto target = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        st->add_option("--base", *base, "catalog name or file")->required();
        st->add_option("--hole", *hole, "hole in basis coordinates, space separated")->required();
        st->add_option("--target", *target, "squared norm of the layer offset")->required();
        st->add_option("--name", *name, "name for the result");
        st->add_option("-o,--output", *out, "write to a file instead of stdout");
        st->callback([&, base, hole, target, name, out] {
            Lattice l = stack_layer(resolve_lattice(*base), parse_scalar_list(*hole),
                                    parse_scalar(*target), opts);
            if (!name->empty()) l = l.renamed(*name);
            write_or_print(lattice_to_json(l), *out);
        });
    }

    // code -----------------------------------------------------------------
    auto* code = app.add_subcommand("code", "binary codes: emit or describe");
    code->require_subcommand(1);
    for (const char* n : {"best10", "golay24", "qr18"}) {
        auto* c = code->add_subcommand(n, std::string("write the ") + n + " code file");
        auto out = std::make_shared<std::string>();
        c->add_option("-o,--output", *out, "write to a file instead of stdout");
        std::string ref = n;
        c->callback([&, ref, out] { write_or_print(code_to_text(resolve_code(ref)), *out); });
    }
    {
        auto* info = code->add_subcommand("info", "length, distance and weight distribution");
        auto ref = std::make_shared<std::string>();
        info->add_option("input", *ref, "best10, golay24, qr18 or a code file")->required();
        info->callback([&, ref] {
            BinaryCode c = resolve_code(*ref);
            Table t;
            t.columns = {"quantity", "value"};
            t.rows.push_back({"length", std::to_string(c.length())});
            t.rows.push_back({"words", std::to_string(c.size())});
            t.rows.push_back({"linear", c.is_linear() ? "1" : "0"});
            if (c.is_linear()) t.rows.push_back({"dimension", std::to_string(c.dimension())});
            t.rows.push_back({"min_distance", std::to_string(c.min_distance())});
            std::vector<std::uint64_t> wd = c.weight_distribution();
            for (std::size_t w = 0; w < wd.size(); ++w)
                if (wd[w]) t.rows.push_back({"A_" + std::to_string(w), std::to_string(wd[w])});
            emit_table(t, json_out());
        });
    }

    // fig3 -----------------------------------------------------------------
    {
        auto* f3 = app.add_subcommand("fig3", "rescaled-density ordinates for a list of inputs");
        auto names = std::make_shared<std::vector<std::string>>();
        f3->add_option("--names", *names, "comma-separated catalog names or files")
            ->required()
            ->delimiter(',');
        f3->callback([&, names] {
            Table t;
            t.columns = {"name", "dim", "center_density", "ordinate"};
            for (const std::string& n : *names) {
                PeriodicPacking p = resolve_packing(n);
                PackingInvariants pi = packing_invariants(p, opts);
                t.rows.push_back({p.name(), std::to_string(p.dim()),
                                  fmt_double(pi.center_density),
                                  fmt_double(fig3_ordinate(p.dim(), pi.center_density))});
            }
            emit_table(t, json_out());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "budget exhausted: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
