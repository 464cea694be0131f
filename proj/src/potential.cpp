//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/potential.cpp
//---------------------------------------------------------------------------//
#include "mcrt/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "mcrt/error.hpp"
#include "io_util.hpp"

namespace mcrt
{
namespace
{
constexpr std::uint32_t not_interior = std::numeric_limits<std::uint32_t>::max();

//---------------------------------------------------------------------------//
// The SPD operator deg * (-Laplacian) on interior unknowns: row i is
// deg(v_i) x_i - sum over interior neighbor ends x_j.
struct InteriorOperator
{
    std::vector<Vertex> vertices;
    std::vector<double> diag;
    std::vector<std::uint32_t> row;
    std::vector<std::uint32_t> col;

    explicit InteriorOperator(Domain const& d)
    {
        MatedCrtMap const& map = d.map();
        auto interior = d.interior();
        vertices.assign(interior.begin(), interior.end());
        std::vector<std::uint32_t> index(map.vertex_count(), not_interior);
        for (std::uint32_t i = 0; i < vertices.size(); ++i)
            index[vertices[i]] = i;
        diag.resize(vertices.size());
        row.assign(1, 0);
        for (Vertex v : vertices)
        {
            diag[row.size() - 1] = map.degree(v);
            for (EdgeEnd const& e : map.ends(v))
            {
                if (index[e.to] != not_interior)
                    col.push_back(index[e.to]);
            }
            row.push_back(static_cast<std::uint32_t>(col.size()));
        }
    }

    std::size_t size() const { return vertices.size(); }

    void apply(std::vector<double> const& x, std::vector<double>& y) const
    {
        for (std::size_t i = 0; i < size(); ++i)
        {
            double s = diag[i] * x[i];
            for (auto k = row[i]; k < row[i + 1]; ++k)
                s -= x[col[k]];
            y[i] = s;
        }
    }
};

double inf_norm(std::vector<double> const& v)
{
    double m = 0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double true_residual(InteriorOperator const& op,
                     std::vector<double> const& x,
                     std::vector<double> const& b,
                     std::vector<double>& r)
{
    op.apply(x, r);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = b[i] - r[i];
    return inf_norm(r);
}

SolveStats solve_cg(InteriorOperator const& op,
                    std::vector<double> const& b,
                    std::vector<double>& x,
                    double tol,
                    std::size_t max_iter)
{
    std::size_t const n = op.size();
    double const bnorm = inf_norm(b);
    SolveStats st;
    if (bnorm == 0.0)
    {
        std::fill(x.begin(), x.end(), 0.0);
        return st;
    }
    double const target = tol * bnorm;
    std::vector<double> r(n), z(n), p(n), q(n);
    double rn = true_residual(op, x, b, r);
    // Restart from the true residual if recurrence drift stalls convergence.
    while (rn > target && st.iterations < max_iter)
    {
        for (std::size_t i = 0; i < n; ++i)
            z[i] = r[i] / op.diag[i];
        p = z;
        double rz = 0;
        for (std::size_t i = 0; i < n; ++i)
            rz += r[i] * z[i];
        std::size_t const restart_at = st.iterations;
        while (st.iterations < max_iter)
        {
            op.apply(p, q);
            double pq = 0;
            for (std::size_t i = 0; i < n; ++i)
                pq += p[i] * q[i];
            if (!(pq > 0))
                break;
            double const alpha = rz / pq;
            for (std::size_t i = 0; i < n; ++i)
            {
                x[i] += alpha * p[i];
                r[i] -= alpha * q[i];
            }
            ++st.iterations;
            if (inf_norm(r) <= target)
                break;
            double rz_new = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                z[i] = r[i] / op.diag[i];
                rz_new += r[i] * z[i];
            }
            double const beta = rz_new / rz;
            rz = rz_new;
            for (std::size_t i = 0; i < n; ++i)
                p[i] = z[i] + beta * p[i];
        }
        double const prev = rn;
        rn = true_residual(op, x, b, r);
        if (st.iterations == restart_at || (rn > target && rn >= prev))
            break;
    }
    st.relative_residual = rn / bnorm;
    return st;
}

SolveStats solve_gs(InteriorOperator const& op,
                    std::vector<double> const& b,
                    std::vector<double>& x,
                    double tol,
                    std::size_t max_iter)
{
    std::size_t const n = op.size();
    double const bnorm = inf_norm(b);
    SolveStats st;
    if (bnorm == 0.0)
    {
        std::fill(x.begin(), x.end(), 0.0);
        return st;
    }
    std::vector<double> r(n);
    double rn = true_residual(op, x, b, r);
    while (rn > tol * bnorm && st.iterations < max_iter)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            double s = b[i];
            for (auto k = op.row[i]; k < op.row[i + 1]; ++k)
                s += x[op.col[k]];
            x[i] = s / op.diag[i];
        }
        ++st.iterations;
        if (st.iterations % 16 == 0 || st.iterations == max_iter)
            rn = true_residual(op, x, b, r);
    }
    rn = true_residual(op, x, b, r);
    st.relative_residual = rn / bnorm;
    return st;
}

}  // namespace

//---------------------------------------------------------------------------//
double laplacian_apply(MatedCrtMap const& map,
                       std::span<double const> field,
                       Vertex at)
{
    if (field.size() != map.vertex_count() || at >= map.vertex_count())
        throw DomainError("field size does not match the map");
    double const u = field[at];
    if (std::isnan(u))
        throw DomainError("missing value at vertex " + std::to_string(at));
    auto ends = map.ends(at);
    if (ends.empty())
        return 0.0;
    double s = 0;
    for (EdgeEnd const& e : ends)
    {
        double const w = field[e.to];
        if (std::isnan(w))
            throw DomainError("missing value at neighbor "
                              + std::to_string(e.to) + " of vertex "
                              + std::to_string(at));
        s += w - u;
    }
    return s / static_cast<double>(ends.size());
}

VertexField laplacian(MatedCrtMap const& map, std::span<double const> field)
{
    if (field.size() != map.vertex_count())
        throw DomainError("field size does not match the map");
    VertexField out(field.size(), 0.0);
    for (Vertex v = 0; v < field.size(); ++v)
    {
        auto ends = map.ends(v);
        if (ends.empty())
            continue;
        double s = 0;
        for (EdgeEnd const& e : ends)
            s += field[e.to] - field[v];
        out[v] = s / static_cast<double>(ends.size());
    }
    return out;
}

VertexField solve_dirichlet(Domain const& domain,
                            std::span<double const> boundary_data,
                            std::span<double const> rhs,
                            SolverConfig const& config,
                            SolveStats* stats)
{
    MatedCrtMap const& map = domain.map();
    std::size_t const n = map.vertex_count();
    if (boundary_data.size() != n || rhs.size() != n)
        throw DomainError("boundary data and rhs must be full-size fields");
    for (Vertex v : domain.boundary())
        if (!std::isfinite(boundary_data[v]))
            throw DomainError("boundary data missing at vertex "
                              + std::to_string(v));
    if (domain.boundary().empty())
        throw SolverError("Dirichlet problem without boundary is singular",
                          std::numeric_limits<double>::infinity());

    InteriorOperator op(domain);
    std::vector<double> b(op.size());
    for (std::size_t i = 0; i < op.size(); ++i)
    {
        Vertex v = op.vertices[i];
        if (!std::isfinite(rhs[v]))
            throw DomainError("rhs missing at vertex " + std::to_string(v));
        double s = -static_cast<double>(map.degree(v)) * rhs[v];
        for (EdgeEnd const& e : map.ends(v))
            if (domain.is_boundary(e.to))
                s += boundary_data[e.to];
        b[i] = s;
    }

    std::vector<double> x(op.size(), 0.0);
    SolveStats st;
    if (config.method == SolverMethod::conjugate_gradient)
    {
        std::size_t max_iter = config.max_iterations
                                   ? config.max_iterations
                                   : 20 * op.size() + 1000;
        st = solve_cg(op, b, x, config.tolerance, max_iter);
    }
    else
    {
        std::size_t max_iter = config.max_iterations
                                   ? config.max_iterations
                                   : 2000 * op.size() + 100000;
        st = solve_gs(op, b, x, config.tolerance, max_iter);
    }
    if (stats)
        *stats = st;
    if (!(st.relative_residual <= config.tolerance))
    {
        std::ostringstream ss;
        ss << "Dirichlet solve did not converge: relative residual "
           << st.relative_residual << " after " << st.iterations
           << " iterations (tolerance " << config.tolerance << ")";
        throw SolverError(ss.str(), st.relative_residual);
    }

    VertexField f(n, 0.0);
    for (Vertex v : domain.boundary())
        f[v] = boundary_data[v];
    for (std::size_t i = 0; i < op.size(); ++i)
        f[op.vertices[i]] = x[i];
    return f;
}

GreenColumn greens_column(Domain const& domain,
                          Vertex source,
                          SolverConfig const& config)
{
    MatedCrtMap const& map = domain.map();
    if (source >= map.vertex_count() || !domain.is_interior(source))
        throw DomainError("Green's function source must be interior");
    std::size_t const n = map.vertex_count();
    VertexField zero(n, 0.0);
    VertexField rhs(n, 0.0);
    rhs[source] = -1.0;
    GreenColumn col;
    col.source = source;
    col.G = solve_dirichlet(domain, zero, rhs, config);
    // One defect correction with the residual summed in long double. The
    // double residual of G stalls near deg * eps * sup G, which is too coarse
    // once G is scaled by a large mass.
    VertexField defect(n, 0.0);
    bool any = false;
    for (Vertex v : domain.interior())
    {
        long double s = 0;
        for (EdgeEnd const& e : map.ends(v))
            s += static_cast<long double>(col.G[e.to]) - col.G[v];
        defect[v] = static_cast<double>(rhs[v] - s / map.degree(v));
        any = any || defect[v] != 0.0;
    }
    if (any)
    {
        auto delta = solve_dirichlet(domain, zero, defect, config);
        for (Vertex v : domain.interior())
            col.G[v] += delta[v];
    }
    col.kernel = col.G;
    double const d = map.degree(source);
    for (double& x : col.kernel)
        x /= d;
    return col;
}

ExitTimes expected_exit_times(Domain const& domain, SolverConfig const& config)
{
    MatedCrtMap const& map = domain.map();
    std::size_t const n = map.vertex_count();
    VertexField zero(n, 0.0);
    VertexField rhs_Q(n, 0.0), rhs_q(n, 0.0);
    for (Vertex v : domain.interior())
    {
        rhs_Q[v] = -1.0;
        rhs_q[v] = -1.0 / map.degree(v);
    }
    ExitTimes out;
    out.Q = solve_dirichlet(domain, zero, rhs_Q, config);
    out.q = solve_dirichlet(domain, zero, rhs_q, config);
    return out;
}

//---------------------------------------------------------------------------//
Pairing divergence_pairing(MatedCrtMap const& map,
                           std::span<double const> f,
                           std::span<double const> g)
{
    if (f.size() != map.vertex_count() || g.size() != map.vertex_count())
        throw DomainError("fields must match the map size");
    // deg(a) * Laplacian u(a) = sum over ends (u(b) - u(a)).
    auto weighted = [&map](std::span<double const> u, Vertex a) {
        double s = 0;
        for (EdgeEnd const& e : map.ends(a))
            s += u[e.to] - u[a];
        return s;
    };
    Pairing p;
    for (Vertex a = 0; a < map.vertex_count(); ++a)
    {
        if (f[a] != 0.0)
        {
            double t = f[a] * weighted(g, a);
            p.lhs += t;
            p.scale += std::abs(t);
        }
        if (g[a] != 0.0)
            p.rhs += g[a] * weighted(f, a);
    }
    return p;
}

void write_field_csv(std::span<double const> field,
                     std::ostream& os,
                     std::string const& column)
{
    os << "vertex," << column << '\n';
    for (std::size_t v = 0; v < field.size(); ++v)
        os << v << ',' << detail::fmt_double(field[v]) << '\n';
}

}  // namespace mcrt
