#pragma once

#include <functional>

#include "olspace/modular.hpp"

namespace olspace {

using Modular = std::function<double(const StepFunction&)>;

/// inf { eps > 0 : modular(f / eps) <= 1 } by bracketing from eps = 1 and
/// bisection. A modular value of +inf counts as > 1. Returns 0 for f = 0 and
/// +inf when no scale brings the modular down to 1.
double luxemburg_norm(const Modular& modular, const StepFunction& f, double rel_tol = 1e-13);

/// Luxemburg norm of Lambda_{phi,w} (or lambda_{phi,w} for sequence weights).
double lambda_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f);
/// Luxemburg norm of M_{phi,w} built on the Q modular.
double m_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f);
/// Luxemburg norm on the configured side.
double norm(const SpaceSpec& spec, const StepFunction& f);

/// inf_{k>0} (1 + P(k f)) / k, with Q standing in for P when phi is an N-function.
double orlicz_amemiya_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f,
                           const PSolverOptions& options = {});

/// 1 / phi^{-1}(1 / W(t)), the norm of chi_(0,t) in Lambda_{phi,w}; 0 < t < gamma.
double fundamental_lambda(const ExtendedOrliczFunction& phi, const Weight& w, double t);

/// (t / W(t)) / phi^{-1}(1 / W(t)) with the inverse taken on (a_phi, b_phi]; 0 < t < gamma.
double fundamental_m(const ExtendedOrliczFunction& phi, const Weight& w, double t);

/// int_0^inf W(d_f(lambda)) d lambda, summed exactly over the levels of f.
double lorentz_norm_distribution(const Weight& w, const StepFunction& f);

}  // namespace olspace
