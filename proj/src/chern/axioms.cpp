#include "realchern/chern/axioms.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <thread>
#include <tuple>

#include "realchern/algebra/error.hpp"
#include "realchern/equivariant/twisted_groups.hpp"

namespace realchern {

std::string CheckResult::line() const
{
    std::string out = "AXIOM " + id + " " + subject + (pass ? " PASS" : " FAIL");
    if (!detail.empty())
        out += " " + detail;
    return out;
}

namespace {

using Task = std::function<CheckResult()>;

CheckResult guarded(const std::string& id, const std::string& subject, const std::function<std::string()>& body)
{
    // body returns an empty string on success, a reason otherwise
    CheckResult r{id, subject, false, ""};
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

int max_chern_index(const RealBundle& b)
{
    return b.base()->truncation_degree() / 2;
}

std::string axiom_one(const RealBundle& b)
{
    const auto& space = b.base();
    if (!(equivariant_chern(b, 0) == a_power(space, 0)))
        return "c~_0 = " + equivariant_chern(b, 0).to_string() + ", expected 1";
    for (int n = 1; n <= max_chern_index(b); ++n) {
        const EquivClass z = equivariant_chern(b, n);
        if (!z.is_homogeneous(2 * n, Twist(n)))
            return "c~_" + std::to_string(n) + " is not in bidegree (" + std::to_string(2 * n) + ", " +
                   std::to_string(n % 2) + ")";
        if (!(forget(z) == b.chern(n)))
            return "forget(c~_" + std::to_string(n) + ") differs from c_" + std::to_string(n);
        if (!z.is_zero() && twisted_group(*space, 2 * n, Twist(n)).free_rank == 0)
            return "c~_" + std::to_string(n) + " is nonzero in a group without free part";
    }
    return "";
}

std::string axiom_two(const SpaceMap& f, const RealBundle& b)
{
    std::string why;
    if (!f.commutes_with_kappa(&why))
        return why;
    const RealBundle pulled = f.pull(b);
    if (!pulled.compatible())
        return "pullback bundle: " + pulled.compatibility_detail();
    if (!(total_equivariant_chern(pulled) == f.pull(total_equivariant_chern(b))))
        return "c~(f*b) = " + total_equivariant_chern(pulled).to_string() + " but f*c~(b) = " +
               f.pull(total_equivariant_chern(b)).to_string();
    const int top = std::min(max_chern_index(b), max_chern_index(pulled));
    for (int n = 1; n <= top; ++n) {
        const UPoly lhs = restrict_fixed(equivariant_chern(pulled, n));
        const UPoly rhs = f.pull(restrict_fixed(equivariant_chern(b, n)));
        if (!(lhs == rhs))
            return "restriction of c~_" + std::to_string(n) + " is not natural: " + lhs.to_string() + " vs " +
                   rhs.to_string();
    }
    return "";
}

std::string axiom_three(const RealBundle& a, const RealBundle& b)
{
    const RealBundle sum = whitney_sum(a, b);
    const EquivClass lhs = total_equivariant_chern(sum);
    const EquivClass rhs = total_equivariant_chern(a) * total_equivariant_chern(b);
    if (!(lhs == rhs))
        return "c~(a+b) = " + lhs.to_string() + " but c~(a)c~(b) = " + rhs.to_string();
    const UPoly rl = restrict_fixed(lhs);
    const UPoly rr = restrict_fixed(total_equivariant_chern(a)) * restrict_fixed(total_equivariant_chern(b));
    if (!(rl == rr))
        return "restricted total classes differ: " + rl.to_string() + " vs " + rr.to_string();
    return "";
}

std::string axiom_four(const RealBundle& hopf)
{
    const auto& space = hopf.base();
    const auto basis = space->integral_ring()->basis(2);
    if (basis.size() != 1)
        return space->name() + " does not have H^2 of rank one";
    if (!hopf.compatible())
        return "Hopf model incompatible: " + hopf.compatibility_detail();
    const Poly h = Poly::term(space->integral_ring(), basis.front());
    const EquivClass expected = a_power(space, 0) + sigma_tilde(h, space);
    const EquivClass actual = total_equivariant_chern(hopf);
    if (!(actual == expected))
        return "c~(hopf) = " + actual.to_string() + ", expected 1 + " + sigma_tilde(h, space).to_string();
    restrict_chern(hopf, 1);
    return "";
}

std::string fixed_restriction(const RealBundle& b)
{
    for (int n = 0; n <= max_chern_index(b); ++n)
        restrict_chern(b, n);
    return "";
}

}  // namespace

std::vector<CheckResult> verify_axioms(const AxiomSuite& suite, bool parallel)
{
    auto hopf = std::find_if(suite.bundles.begin(), suite.bundles.end(),
                             [&](const RealBundle& b) { return b.name() == suite.hopf; });
    if (hopf == suite.bundles.end())
        throw Error(ErrorCode::MissingHopf, "Hopf model required (no bundle named '" + suite.hopf + "')");

    std::vector<Task> tasks;
    for (const auto& b : suite.bundles) {
        tasks.push_back([&b] {
            CheckResult r{"COMPAT", b.name(), b.compatible(), b.compatibility_detail()};
            return r;
        });
        tasks.push_back([&b] { return guarded("I", b.name(), [&] { return axiom_one(b); }); });
        tasks.push_back([&b] { return guarded("FIXED", b.name(), [&] { return fixed_restriction(b); }); });
    }
    for (const auto& f : suite.maps)
        for (const auto& b : suite.bundles)
            if (b.base()->name() == f.target()->name())
                tasks.push_back(
                    [&f, &b] { return guarded("II", f.name() + ":" + b.name(), [&] { return axiom_two(f, b); }); });
    for (std::size_t i = 0; i < suite.bundles.size(); ++i)
        for (std::size_t j = i; j < suite.bundles.size(); ++j) {
            const auto& a = suite.bundles[i];
            const auto& b = suite.bundles[j];
            if (a.base()->name() != b.base()->name())
                continue;
            tasks.push_back([&a, &b] {
                return guarded("III", a.name() + "+" + b.name(), [&] { return axiom_three(a, b); });
            });
        }
    const RealBundle& h = *hopf;
    tasks.push_back([&h] { return guarded("IV'", h.name(), [&] { return axiom_four(h); }); });

    std::vector<CheckResult> results(tasks.size());
    const unsigned workers = parallel ? std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u)) : 1u;
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(drain);
    drain();
    for (auto& t : pool)
        t.join();
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.id, a.subject) < std::tie(b.id, b.subject);
    });
    return results;
}

}  // namespace realchern
