#include "spiralkit/selftest.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace spiralkit::selftest
{

std::uint64_t seed_from_env()
{
    const char* env = std::getenv("SPIRALKIT_SEED");
    if (env == nullptr || *env == '\0')
        return kDefaultSeed;
    try
    {
        return std::stoull(env, nullptr, 0);
    }
    catch (const std::exception&)
    {
        throw Error(ErrorKind::InvalidInput, std::string("SPIRALKIT_SEED is not an integer: ") + env);
    }
}

double Rng::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::log_uniform(double lo, double hi)
{
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::integer(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Rng::coin(double p)
{
    return std::bernoulli_distribution(p)(engine_);
}

CurvatureElement Rng::element(double extent, double kmax)
{
    return {uniform(-extent, extent), uniform(-extent, extent), uniform(-kPi, kPi), uniform(-kmax, kmax)};
}

Similarity Rng::similarity()
{
    Similarity s;
    s.rotation = uniform(-kPi, kPi);
    s.scale = log_uniform(0.2, 5.0);
    s.translation = {uniform(-5.0, 5.0), uniform(-5.0, 5.0)};
    s.reflect = coin();
    return s;
}

} // namespace spiralkit::selftest
