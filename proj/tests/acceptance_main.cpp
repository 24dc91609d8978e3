#include "spiralkit/selftest.hpp"

#include <cstdio>
#include <cstdlib>

int main()
{
    using namespace spiralkit::selftest;
    const std::uint64_t seed = seed_from_env();
    std::printf("seed 0x%llx\n", static_cast<unsigned long long>(seed));
    int failed = 0;
    for (const CriterionResult& r : run_all(seed, true))
    {
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", kCriterionCount - failed, kCriterionCount);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
