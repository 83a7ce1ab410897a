#pragma once

#include "entm/qcore.hpp"

#include <array>
#include <map>
#include <string>

namespace entm {

enum class Family { Pure, Horodecki, HPrime, PPrime, BellDiagonal, GenHorodecki, GHPrime };

/// Tagged parameter record identifying a state in one of the parametric
/// families. Parameter names: p, P, N, x, l0..l3 as applicable.
struct FamilyPoint {
    Family family;
    std::map<std::string, double> params;
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Bell basis |beta_{2j+k}> = (|0,k> + (-1)^j |1,1-k>)/sqrt(2).
Vector4c bell_ket(int i);

/// sqrt(P)|01> + sqrt(1-P)|10>; negativity 2 sqrt(P(1-P)).
PureState pure_state(double P);

/// REE of a pure state at negativity N: H2((1 + sqrt(1-N^2))/2).
double ree_pure(double N);

/// p |psi+><psi+| + (1-p) |00><00|.
DensityMatrix horodecki_state(double p);

/// Closed-form negativity sqrt((1-p)^2 + p^2) - (1-p).
double horodecki_negativity(double p);

/// p(N) = sqrt(2N(1+N)) - N, the Horodecki mixing weight at negativity N.
double horodecki_p_from_negativity(double N);

/// REE of the Horodecki state at negativity N (Vedral-Plenio closed form).
double ree_horodecki(double N);

/// Closest separable state of the Horodecki family (q = p/2):
/// (1-q)^2 |00><00| + q^2 |11><11| + 2q(1-q) |psi+><psi+|. PPT-boundary.
DensityMatrix css_horodecki(double p);

/// (1-x) rho_H(p) + x css_H(p) with x chosen so the negativity equals N.
/// Defined for p in [p0(N), 1].
DensityMatrix hprime_state(double p, double N);
double hprime_mixing(double p, double N);
double ree_hprime(double p, double N);

/// (1-x)|psi_P><psi_P| + x (P|01><01| + (1-P)|10><10|) with x chosen so the
/// negativity equals N. Defined for P in [P-, P+], P± = (1 ± sqrt(1-N^2))/2.
DensityMatrix pprime_state(double P, double N);
double ree_pprime(double P, double N);

/// Mixture of Bell projectors in the ordering of bell_ket.
DensityMatrix bell_diagonal(const std::array<double, 4>& lambdas);

/// 1 - H2((1+N)/2), the lower REE bound at fixed negativity.
double ree_bell_diagonal(double N);

/// Construct the state described by a FamilyPoint (dispatch).
DensityMatrix family_state(const FamilyPoint& fp);

}  // namespace entm
