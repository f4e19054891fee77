#ifndef CAPA_ISAC_SCENE_SAMPLER_HPP
#define CAPA_ISAC_SCENE_SAMPLER_HPP

#include <random>

#include "capa_isac/scene.hpp"

namespace capa_isac {

/// Random scene for the randomized equivalence and invariant suites.
/// Ranges bracket the stock setup while staying clear of the array plane:
/// ranges in [5, 50] m, angles in [pi/6, 5 pi/6], square faces with side in
/// [0.1, 0.5] m; everything else keeps its default.
Scene sample_scene(std::mt19937_64& rng);

}  // namespace capa_isac

#endif
