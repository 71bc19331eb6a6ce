#include "realchern/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "realchern/algebra/error.hpp"
#include "realchern/algebra/parser.hpp"
#include "realchern/chern/axioms.hpp"
#include "realchern/conjugation/frame.hpp"
#include "realchern/equivariant/twisted_groups.hpp"

namespace realchern::cli {

std::string human_line(const Record& r)
{
    std::string out = r.name + " " + r.subject;
    if (r.kind == Record::Check) {
        out += " " + r.result;
        if (!r.detail.empty())
            out += " " + r.detail;
    } else {
        out += " = " + r.result;
        if (!r.detail.empty())
            out += "  # " + r.detail;
    }
    return out;
}

std::string machine_line(const Record& r)
{
    nlohmann::ordered_json j;
    j[r.kind == Record::Check ? "check" : "query"] = r.name;
    j["subject"] = r.subject;
    j["result"] = r.result;
    j["detail"] = r.detail;
    return j.dump();
}

namespace {

Record check(std::string name, std::string subject, bool pass, std::string detail = "")
{
    return {Record::Check, std::move(name), std::move(subject), pass ? "PASS" : "FAIL", std::move(detail)};
}

Record query(std::string name, std::string subject, std::string result, std::string detail = "")
{
    return {Record::Query, std::move(name), std::move(subject), std::move(result), std::move(detail)};
}

int top_degree(const SpaceModel& space, std::optional<int> max)
{
    return std::min(space.truncation_degree(), max.value_or(space.truncation_degree()));
}

}  // namespace

std::vector<Record> groups_report(const Workspace& ws, const std::string& name, std::optional<int> max, Twists twists)
{
    const SpaceModel& space = *ws.space(name);
    if (max && *max > space.truncation_degree())
        throw Error(ErrorCode::OutOfRange, name + " is modelled up to degree " +
                                               std::to_string(space.truncation_degree()));
    std::vector<int> eps;
    if (twists != Twists::One)
        eps.push_back(0);
    if (twists != Twists::Zero)
        eps.push_back(1);
    std::vector<Record> out;
    for (int e : eps)
        for (int k = 0; k <= top_degree(space, max); ++k)
            out.push_back(query("groups", "H^" + std::to_string(k) + "(" + name + ";Z(" + std::to_string(e) + "))",
                                twisted_group(space, k, Twist(e)).to_string()));
    return out;
}

std::vector<Record> chern_report(const Workspace& ws, const std::string& name, std::optional<int> n)
{
    const RealBundle& b = ws.bundle(name);
    const int top = b.base()->truncation_degree() / 2;
    if (n && (*n < 0 || *n > top))
        throw Error(ErrorCode::DegreeOverflow, "c~_" + std::to_string(*n) + " is above the truncation degree of " +
                                                   b.base()->name());
    std::vector<Record> out;
    for (int k = n.value_or(0); k <= n.value_or(top); ++k) {
        const EquivClass z = equivariant_chern(b, k);
        if (!n && k > 0 && z.is_zero())
            continue;
        const std::string subject = "c~" + std::to_string(k) + "(" + name + ")";
        out.push_back(query("chern", subject, z.to_string(),
                            "bidegree (" + std::to_string(2 * k) + "," + std::to_string(k % 2) + ")"));
        out.push_back(query("forget", subject, forget(z).to_string()));
        out.push_back(query("restrict", subject, restrict_chern(b, k).to_string()));
    }
    return out;
}

namespace {

std::vector<SpacePtr> selected_spaces(const Workspace& ws, const VerifyOptions& o)
{
    if (o.space)
        return {ws.space(*o.space)};
    return ws.spaces();
}

void axioms(const Workspace& ws, const VerifyOptions& o, std::vector<Record>& out)
{
    AxiomSuite suite{ws.bundles(), ws.maps()};
    try {
        for (const auto& r : verify_axioms(suite, o.parallel))
            out.push_back(check("AXIOM " + r.id, r.subject, r.pass, r.detail));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::MissingHopf)
            throw;
        out.push_back(check("AXIOM IV'", suite.hopf, false, e.what()));
    }
}

/// Conjugation equation on every basis class, and the pullback-square
/// description of sigma~ (it is the lift of (x, sigma(x mod 2))).
void conjugation(const Workspace& ws, const VerifyOptions& o, std::vector<Record>& out)
{
    for (const auto& space : selected_spaces(ws, o)) {
        const int top = top_degree(*space, o.max);
        for (int d = 0; d <= top; d += 2) {
            const auto basis = space->mod2_ring()->basis(d);
            if (basis.empty())
                continue;
            const std::string subject = space->name() + ":" + std::to_string(d);
            std::string conj_failure;
            std::string lift_failure;
            for (const auto& m : basis) {
                const Poly x = Poly::term(space->mod2_ring(), m);
                const ConjugationCheck c = conjugation_equation_check(x, *space);
                if (!c.holds && conj_failure.empty())
                    conj_failure = x.to_string() + ": " + c.detail;
                const Poly xi = Poly::term(space->integral_ring(), m);
                const EquivClass s = sigma_tilde(xi, space);
                try {
                    if (!(integral_lift(xi, sigma(x, *space), space) == s) && lift_failure.empty())
                        lift_failure = x.to_string() + ": lift differs from sigma~";
                } catch (const Error& e) {
                    if (lift_failure.empty())
                        lift_failure = x.to_string() + ": " + e.what();
                }
            }
            const std::string count = std::to_string(basis.size()) + (basis.size() == 1 ? " class" : " classes");
            out.push_back(check("CONJ", subject, conj_failure.empty(), conj_failure.empty() ? count : conj_failure));
            out.push_back(check("LIFT", subject, lift_failure.empty(), lift_failure.empty() ? count : lift_failure));
        }
    }
}

void ranks(const Workspace& ws, const VerifyOptions& o, std::vector<Record>& out)
{
    for (const auto& space : selected_spaces(ws, o)) {
        const RankReport report = rank_reconciliation(*space, top_degree(*space, o.max));
        for (const auto& row : report.rows) {
            const std::string subject =
                space->name() + ":" + std::to_string(row.degree) + ":" + std::to_string(row.twist.parity);
            std::string detail = row.group.to_string();
            if (!row.matches())
                detail += " vs Leray-Hirsch free " + std::to_string(row.lh_free) + ", torsion " +
                          std::to_string(row.lh_torsion);
            out.push_back(check("RANK", subject, row.matches(), detail));
        }
    }
}

template <typename F>
Record guarded(const std::string& name, const std::string& subject, F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return check(name, subject, false, e.what());
    }
}

void wu(const Workspace& ws, const VerifyOptions&, std::vector<Record>& out)
{
    for (const auto& m : ws.manifolds()) {
        for (Side side : {Side::M, Side::N}) {
            const std::string subject = m.name() + "[" + std::string(side_name(side)) + "]";
            out.push_back(guarded("WU", subject, [&] {
                const Poly v = wu_classes(m, side);
                const Poly back = total_sq(v, m.squares(side));
                return check("WU", subject, back == m.total_sw(side),
                             "v = " + v.to_string() + (back == m.total_sw(side) ? "" : ", Sq(v) = " + back.to_string()));
            }));
            out.push_back(guarded("DUALITY", subject, [&] {
                const DualityCheck d = wu_duality_check(m, side);
                return check("DUALITY", subject, d.holds, d.detail);
            }));
        }
        try {
            for (const auto& row : kappa_transfer_check(m))
                out.push_back(check("KAPPA", m.name() + ":" + row.kind + std::to_string(row.k), row.pass, row.detail));
        } catch (const Error& e) {
            out.push_back(check("KAPPA", m.name(), false, e.what()));
        }
    }
}

}  // namespace

std::vector<Record> verify_report(const Workspace& ws, const VerifyOptions& o)
{
    const bool all = o.suite == "all";
    if (!all && o.suite != "axioms" && o.suite != "conjugation" && o.suite != "ranks" && o.suite != "wu")
        throw Error(ErrorCode::UnknownName, "unknown suite '" + o.suite + "'");
    std::vector<Record> out;
    if (all || o.suite == "axioms")
        axioms(ws, o, out);
    if (all || o.suite == "conjugation")
        conjugation(ws, o, out);
    if (all || o.suite == "ranks")
        ranks(ws, o, out);
    if (all || o.suite == "wu")
        wu(ws, o, out);
    return out;
}

std::vector<Record> manifold_report(const Workspace& ws, const std::string& name, const std::string& action,
                                    const std::string& other)
{
    const ManifoldModel& m = ws.manifold(name);
    std::vector<Record> out;
    auto tag = [](const ManifoldModel& x, Side side) { return x.name() + "[" + std::string(side_name(side)) + "]"; };
    if (action == "wu") {
        for (Side side : {Side::M, Side::N})
            out.push_back(query("wu", tag(m, side), wu_classes(m, side).to_string()));
    } else if (action == "sw-numbers") {
        for (Side side : {Side::M, Side::N})
            for (const auto& [lambda, bit] : sw_numbers(m, side))
                out.push_back(query("sw-number", tag(m, side) + " " + format_partition(lambda), bit ? "1" : "0"));
    } else if (action == "kappa-check") {
        for (const auto& row : kappa_transfer_check(m))
            out.push_back(check("KAPPA", m.name() + ":" + row.kind + std::to_string(row.k), row.pass, row.detail));
    } else if (action == "duality") {
        for (Side side : {Side::M, Side::N}) {
            const DualityCheck d = wu_duality_check(m, side);
            out.push_back(check("DUALITY", tag(m, side), d.holds, d.detail));
        }
    } else if (action == "compare") {
        if (other.empty())
            throw Error(ErrorCode::UnknownName, "compare needs a second manifold");
        const ManifoldModel& n = ws.manifold(other);
        const CobordismComparison c = cobordism_compare(m, n);
        auto listed = [](const std::vector<std::vector<int>>& diffs) {
            std::string s;
            for (const auto& lambda : diffs)
                s += (s.empty() ? "differs in " : ", ") + format_partition(lambda);
            return s;
        };
        const std::string pair = m.name() + "," + n.name();
        out.push_back(query("compare", pair + " M", c.m_equal ? "equal" : "different", listed(c.m_differences)));
        out.push_back(query("compare", pair + " N", c.n_equal ? "equal" : "different", listed(c.n_differences)));
        out.push_back(check("COBORDISM", pair, c.consistent(),
                            c.consistent() ? "" : "M-numbers and N-numbers disagree on equality"));
    } else {
        throw Error(ErrorCode::UnknownName, "unknown manifold action '" + action + "'");
    }
    return out;
}

namespace {

void emit(const std::vector<Record>& records, bool machine, std::ostream& out)
{
    for (const auto& r : records)
        out << (machine ? machine_line(r) : human_line(r)) << '\n';
}

int status(const std::vector<Record>& records)
{
    return std::any_of(records.begin(), records.end(), [](const Record& r) { return r.failed(); }) ? 1 : 0;
}

void report_error(const Error& e, const std::string& where, std::ostream& err)
{
    err << "error[" << static_cast<int>(e.code()) << " " << error_code_name(e.code()) << "] ";
    if (!where.empty())
        err << where << (dynamic_cast<const ParseError*>(&e) ? ":" : ": ");
    err << e.what() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equivariant Chern classes of Real bundles over conjugation spaces", "realchern"};
    app.require_subcommand(1);
    app.fallthrough();

    std::vector<std::string> files;
    std::optional<int> max_degree;
    bool machine = false;
    bool no_catalogue = false;
    bool truncate_input = false;
    app.add_option("--workspace", files, "Definition file(s) loaded after the catalogue")->check(CLI::ExistingFile);
    app.add_option("--max-degree", max_degree, "Degree cap for spaces that do not declare one (default 16)")
        ->check(CLI::Range(1, 512));
    app.add_flag("--machine", machine, "One JSON record per line");
    app.add_flag("--no-catalogue", no_catalogue, "Do not load the shipped model catalogue");
    app.add_flag("--truncate", truncate_input, "Drop expression parts above the degree cap instead of failing");

    std::string space_name;
    std::optional<int> max;
    std::string twist = "both";
    auto* groups = app.add_subcommand("groups", "Twisted equivariant cohomology groups");
    groups->add_option("space", space_name)->required();
    groups->add_option("--max", max, "Highest degree")->check(CLI::NonNegativeNumber);
    groups->add_option("--twist", twist, "0, 1 or both")->check(CLI::IsMember({"0", "1", "both"}));

    std::string bundle_name;
    std::optional<int> chern_n;
    bool total = false;
    auto* chern = app.add_subcommand("chern", "Equivariant Chern classes of a bundle");
    chern->add_option("bundle", bundle_name)->required();
    chern->add_option("n", chern_n)->check(CLI::NonNegativeNumber);
    chern->add_flag("--total", total, "Every nonzero class");

    VerifyOptions vo;
    std::optional<std::string> verify_space;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vo.suite)
        ->check(CLI::IsMember({"axioms", "conjugation", "ranks", "wu", "all"}))
        ->required();
    verify->add_option("--space", verify_space, "Restrict conjugation/ranks to one space");
    verify->add_option("--max", max, "Highest degree for conjugation/ranks")->check(CLI::NonNegativeNumber);
    verify->add_flag("--serial", serial, "Run the checks on one thread");

    std::string manifold_name;
    std::string action;
    std::string other;
    auto* manifold = app.add_subcommand("manifold", "Wu classes, SW numbers and kappa transfer");
    manifold->add_option("manifold", manifold_name)->required();
    manifold->add_option("action", action)
        ->check(CLI::IsMember({"wu", "sw-numbers", "kappa-check", "duality", "compare"}))
        ->required();
    manifold->add_option("other", other, "Second manifold for compare");

    std::vector<std::string> check_files;
    std::string expression;
    std::string ring_kind = "integral";
    auto* parse_check = app.add_subcommand("parse-check", "Validate definition files or an expression");
    parse_check->add_option("files", check_files)->check(CLI::ExistingFile);
    parse_check->add_option("--expr", expression, "Expression to parse and print canonically");
    parse_check->add_option("--space", space_name, "Space whose ring the expression lives in");
    parse_check->add_option("--ring", ring_kind, "integral, mod2 or fixed")
        ->check(CLI::IsMember({"integral", "mod2", "fixed"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    WorkspaceOptions options;
    if (max_degree)
        options.default_degree_cap = *max_degree;
    options.allow_truncation = truncate_input;
    Workspace ws(options);
    std::string where;
    try {
        if (!no_catalogue) {
            where = "<catalogue>";
            ws.load_catalogue();
        }
        for (const auto& f : files) {
            where = f;
            ws.load_file(f);
        }
        if (parse_check->parsed()) {
            for (const auto& f : check_files) {
                where = f;
                ws.load_file(f);
            }
        }
        where.clear();
    } catch (const Error& e) {
        report_error(e, where, err);
        return 2;
    }

    try {
        std::vector<Record> records;
        if (groups->parsed()) {
            const Twists t = twist == "0" ? Twists::Zero : twist == "1" ? Twists::One : Twists::Both;
            records = groups_report(ws, space_name, max, t);
        } else if (chern->parsed()) {
            if (!total && !chern_n)
                throw Error(ErrorCode::UnknownName, "chern needs an index n or --total");
            records = chern_report(ws, bundle_name, total ? std::nullopt : chern_n);
        } else if (verify->parsed()) {
            vo.space = verify_space;
            vo.max = max;
            vo.parallel = !serial;
            records = verify_report(ws, vo);
            const auto failed = std::count_if(records.begin(), records.end(), [](const Record& r) { return r.failed(); });
            emit(records, machine, out);
            if (!machine)
                out << records.size() << " checks, " << failed << " failed\n";
            return failed ? 1 : 0;
        } else if (manifold->parsed()) {
            records = manifold_report(ws, manifold_name, action, other);
        } else if (parse_check->parsed()) {
            if (!expression.empty()) {
                if (space_name.empty())
                    throw Error(ErrorCode::UnknownName, "--expr needs --space");
                const SpacePtr& s = ws.space(space_name);
                const RingPtr& ring = ring_kind == "integral" ? s->integral_ring()
                                      : ring_kind == "mod2"   ? s->mod2_ring()
                                                              : s->fixed_ring();
                ParseOptions po;
                po.allow_truncation = truncate_input;
                records.push_back(query("parse", expression, parse_poly(expression, ring, po).to_string()));
            } else {
                records.push_back(query("parse", "workspace", "ok",
                                        std::to_string(ws.spaces().size()) + " spaces, " +
                                            std::to_string(ws.bundles().size()) + " bundles, " +
                                            std::to_string(ws.manifolds().size()) + " manifolds, " +
                                            std::to_string(ws.maps().size()) + " maps"));
            }
        }
        emit(records, machine, out);
        return status(records);
    } catch (const Error& e) {
        report_error(e, "", err);
        return e.code() == ErrorCode::InternalMismatch ? 1 : 2;
    }
}

}  // namespace realchern::cli
