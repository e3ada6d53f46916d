#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bott;

TEST(Enumerate, Counts)
{
    EXPECT_EQ(scan::enumerate_matrices(1, 0, scan::Parity::all).size(), 1u);
    EXPECT_EQ(scan::enumerate_matrices(3, 2, scan::Parity::all).size(), 125u);
    EXPECT_EQ(scan::enumerate_matrices(3, 2, scan::Parity::even_only).size(), 27u);
    EXPECT_EQ(scan::enumerate_matrices(2, 3, scan::Parity::even_only).size(), 3u);
    for (const auto& a : scan::enumerate_matrices(3, 2, scan::Parity::even_only))
        EXPECT_TRUE(is_z2_trivial(a));
}

TEST(Scan, StageOne)
{
    scan::ScanConfig cfg;
    cfg.n = 1;
    cfg.bound = 0;
    cfg.check_aut = true;
    auto r = scan::run(cfg);
    EXPECT_EQ(r.matrices, 1u);
    EXPECT_EQ(r.automorphisms, 2u);
    EXPECT_TRUE(r.clean());
}

TEST(Scan, PontrjaginStageTwo)
{
    scan::ScanConfig cfg;
    cfg.n = 2;
    cfg.bound = 2;
    cfg.check_aut = true;
    cfg.check_oracles = true;
    cfg.pair_box = 3;
    auto r = scan::run(cfg);
    EXPECT_EQ(r.matrices, 5u);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.errors.empty());
    // Hirzebruch surfaces split by the parity of the twist.
    EXPECT_EQ(r.classes.size(), 2u);
}

TEST(Scan, Z2TrivialCertified)
{
    scan::ScanConfig cfg;
    cfg.n = 3;
    cfg.bound = 2;
    cfg.parity = scan::Parity::even_only;
    cfg.check_pontrjagin = false;
    cfg.check_certify = true;
    auto r = scan::run(cfg);
    EXPECT_EQ(r.matrices, 27u);
    EXPECT_EQ(r.not_covered, 0u);
    EXPECT_GT(r.certified, 0u);
    EXPECT_TRUE(r.clean());
}

TEST(Scan, DeterministicAcrossJobs)
{
    scan::ScanConfig cfg;
    cfg.n = 3;
    cfg.bound = 1;
    cfg.check_certify = true;
    cfg.jobs = 1;
    auto one = scan::to_json(cfg, scan::run(cfg)).dump();
    cfg.jobs = 4;
    auto four = scan::to_json(cfg, scan::run(cfg)).dump();
    EXPECT_EQ(one, four);
}

TEST(Scan, Budget)
{
    scan::ScanConfig cfg;
    cfg.n = 4;
    cfg.bound = 3;
    EXPECT_THROW(scan::run(cfg), scan::BudgetExceeded);
    cfg.budget = 1;
    cfg.n = 1;
    cfg.bound = 0;
    EXPECT_THROW(scan::run(cfg), scan::BudgetExceeded);
}
