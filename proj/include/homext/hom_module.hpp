#ifndef HOMEXT_HOM_MODULE_HPP
#define HOMEXT_HOM_MODULE_HPP

#include "homext/exactlin.hpp"
#include "homext/report.hpp"

namespace homext::exactlin {

/// Involutivity of the twist: alpha^2 = id, exactly.
AxiomReport check_hom_module(const HomModule& v);

/// Morphism of Hom-modules: f.matrix * alpha_V = alpha_W * f.matrix.
AxiomReport check_hom_morphism(const LinearMapBetween& f);

}  // namespace homext::exactlin

#endif
