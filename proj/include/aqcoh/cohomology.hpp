#pragma once

#include "aqcoh/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqc {

/// Hom(V_n, M) = sum over generators g of V_n of M_{|g|}, with coboundary
/// f -> f o d. Block coordinates of degree n are the canonical coordinates
/// of the summands M_{|g|}, in generator order.
struct CochainComplex {
    std::string resolution;
    std::string module;
    ChainComplexAb complex;
    std::vector<DirectSum> sums;
    std::vector<std::vector<std::string>> labels;  // "x:alpha" per block coordinate

    std::size_t length() const noexcept { return complex.length(); }
    FGAbelianGroup group(long n) const { return complex.group(n); }
};

/// Throws StructuralError if M is not a module over the resolved algebra.
CochainComplex cochain_complex(const FreeResolution& r, const PiModule& m);
std::vector<FGAbelianGroup> cohomology_groups(const CochainComplex& c);

/// Hom(B, M) -> Hom(A, M) induced by f: A -> B, in degree n of the complexes.
AbHom cochain_pullback(const FreeModuleMap& f, const PiModule& m, const DirectSum& hom_b, const DirectSum& hom_a);

struct InducedMap {
    std::vector<AbHom> cochain;     // degreewise C^n(M0) -> C^n(M1)
    std::vector<AbHom> cohomology;  // H^n(M0) -> H^n(M1)
};

/// Postcomposition with a coefficient map tau: M0 -> M1 over one resolution.
InducedMap induced_coefficient_map(const CochainComplex& c0, const CochainComplex& c1, const FreeResolution& r,
                                   const PiMap& tau);
/// Maps on cohomology induced by a degreewise cochain map.
std::vector<AbHom> induced_on_cohomology(const ChainComplexAb& from, const ChainComplexAb& to,
                                         const std::vector<AbHom>& maps);

/// Shifted mapping cone of xi(a, b) = tau_*(a) - Phi^*(b):
///   C^n = C^n(X;M0) + C^n(Y;M1) + C^{n-1}(X;M1),
///   D(a, b, c) = (da, db, xi(a, b) - dc).
struct ArrowCochainComplex {
    CochainComplex x0;  // C(X; M0)
    CochainComplex y1;  // C(Y; M1)
    CochainComplex x1;  // C(X; M1), M1 regarded over the source algebra
    std::vector<AbHom> tau;   // C^n(X;M0) -> C^n(X;M1)
    std::vector<AbHom> pull;  // C^n(Y;M1) -> C^n(X;M1)
    std::vector<DirectSum> sums;
    ChainComplexAb cone;

    bool window_exhausted() const;
};

/// phi: Lambda -> Gamma is read off `tau`'s base algebras; `lift` is a chain
/// map V -> W over it. Throws StructuralError on mismatched bases or shapes.
ArrowCochainComplex arrow_complex(const FreeResolution& v, const FreeResolution& w,
                                  const std::vector<FreeModuleMap>& lift, const PiMap& tau);
std::vector<FGAbelianGroup> arrow_cohomology(const ArrowCochainComplex& a);

/// The six families of the long exact sequence
///   H^n_phi -> H^n(X;M0) + H^n(Y;M1) -> H^n(X;M1) -> H^{n+1}_phi
/// together with its maps, for n = 0 .. top.
struct LesData {
    std::vector<FGAbelianGroup> arrow, x0, y1, x1, middle;
    std::vector<AbHom> theta, xi, connecting;
};

struct LesReport {
    std::vector<AbHom> sequence;
    std::vector<std::string> labels;  // middle group of each junction
    ExactnessReport exactness;
};

LesData les_data(const ArrowCochainComplex& a);
LesReport assemble_les(const LesData& data);

struct ProfileEntry {
    int k = 0;
    std::string label;
    std::vector<PiModule> factors;
};

/// Homotopy of the Eilenberg-Mac Lane object E(M, n):
/// Lambda at 0, Omega Lambda at 2, M at n, Omega M at n+2, zero otherwise.
std::vector<ProfileEntry> em_homotopy_profile(const PiModule& algebra, const PiModule& m, int n);

struct ObstructionStage {
    int stage = 0;
    int existence_degree = 0;   // stage + 2
    int difference_degree = 0;  // stage + 1
    FGAbelianGroup arrow_existence, arrow_difference;
    FGAbelianGroup source_existence, source_difference;
    FGAbelianGroup target_existence, target_difference;
    bool window_exhausted = false;
};

struct ObstructionReport {
    std::string map;
    std::vector<ObstructionStage> stages;

    bool all_hosts_vanish() const;
};

/// Host groups for the realization obstructions of phi. Stage k uses the
/// coefficients Omega^k phi: the obstruction lives in H^{k+2} and the
/// choices are classified by H^{k+1}.
ObstructionReport obstruction_report(const PiMap& phi, const FreeResolution& v, const FreeResolution& w,
                                     int stages);

} // namespace aqc
