#include "capa_isac/scene_sampler.hpp"

namespace capa_isac {

Scene sample_scene(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> range(5.0, 50.0);
    std::uniform_real_distribution<double> angle(std::numbers::pi / 6.0,
                                                 5.0 * std::numbers::pi / 6.0);
    std::uniform_real_distribution<double> side(0.1, 0.5);
    SceneParams p;
    p.cu = PolarPosition(range(rng), angle(rng), angle(rng));
    p.target = PolarPosition(range(rng), angle(rng), angle(rng));
    const double s = side(rng);
    p.lx = s;
    p.lz = s;
    return Scene(p);
}

}  // namespace capa_isac
