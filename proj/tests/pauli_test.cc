#include "rewire/pauli.h"

#include <gtest/gtest.h>

#include "rewire/errors.h"
#include "test_util.h"

using namespace rewire;
using namespace rewire::testing;

TEST(PauliParse, encodes_letters) {
    PauliOperator p = PauliOperator::parse("+XZZXI");
    EXPECT_EQ(p.phase(), 0);
    EXPECT_EQ(p.x(), BitVector({1, 0, 0, 1, 0}));
    EXPECT_EQ(p.z(), BitVector({0, 1, 1, 0, 0}));

    PauliOperator m = PauliOperator::parse("-ZZ");
    EXPECT_EQ(m.phase(), 2);
    EXPECT_EQ(m.x(), BitVector({0, 0}));
    EXPECT_EQ(m.z(), BitVector({1, 1}));

    PauliOperator y = PauliOperator::parse("+Y");
    EXPECT_EQ(y.phase(), 1);
    EXPECT_EQ(y.x(), BitVector({1}));
    EXPECT_EQ(y.z(), BitVector({1}));
}

TEST(PauliParse, sign_optional_on_input_mandatory_on_output) {
    EXPECT_EQ(PauliOperator::parse("XY").str(), "+XY");
    EXPECT_EQ(PauliOperator::parse("-iZ").str(), "-iZ");
    EXPECT_EQ(PauliOperator::parse("+iYY").str(), "+iYY");
}

TEST(PauliParse, errors_name_position) {
    try {
        PauliOperator::parse("+XQZ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(PauliOperator::parse(""), ParseError);
    EXPECT_THROW(PauliOperator::parse("+"), ParseError);
    EXPECT_THROW(PauliOperator::parse("-i"), ParseError);
}

TEST(PauliParse, round_trip_random) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 2000; t++) {
        PauliOperator p = random_pauli(rng, 1 + rng() % 9);
        EXPECT_EQ(PauliOperator::parse(p.str()), p);
    }
}

TEST(PauliMultiply, examples) {
    PauliOperator x = PauliOperator::parse("+X");
    PauliOperator z = PauliOperator::parse("+Z");
    PauliOperator xz = x * z;
    EXPECT_EQ(xz.phase(), 0);
    EXPECT_EQ(xz.x(), BitVector({1}));
    EXPECT_EQ(xz.z(), BitVector({1}));
    EXPECT_EQ(xz.str(), "-iY");
    EXPECT_EQ(((z * x).phase() - xz.phase() + 4) % 4, 2);
    EXPECT_EQ((PauliOperator::parse("+ZZ") * PauliOperator::parse("+ZI")).str(), "+IZ");
}

TEST(PauliMultiply, size_mismatch) {
    EXPECT_THROW(PauliOperator::parse("+X") * PauliOperator::parse("+XX"), DimensionError);
    EXPECT_THROW(anticommutes(PauliOperator::parse("+X"), PauliOperator::parse("+XX")), DimensionError);
}

TEST(PauliCommutes, examples) {
    auto c = [](const char *a, const char *b) { return anticommutes(PauliOperator::parse(a), PauliOperator::parse(b)); };
    EXPECT_TRUE(c("X", "Z"));
    EXPECT_FALSE(c("X", "X"));
    EXPECT_TRUE(c("+IX", "+ZZ"));
    EXPECT_FALSE(c("+IX", "+XX"));
    EXPECT_FALSE(c("+IX", "+ZI"));
}

TEST(PauliCommutes, two_qubit_examples_match_dense_matrices) {
    for (auto [a, b] : std::vector<std::pair<const char *, const char *>>{
             {"+IX", "+ZZ"}, {"+IX", "+XX"}, {"+IX", "+ZI"}}) {
        Mat ma = dense_from_text(a), mb = dense_from_text(b);
        Mat ab = matmul(ma, mb), ba = matmul(mb, ma);
        bool commute = distance(ab, ba) < 1e-12;
        EXPECT_EQ(!commute, anticommutes(PauliOperator::parse(a), PauliOperator::parse(b))) << a << " " << b;
    }
}

TEST(PauliHermitian, examples) {
    EXPECT_EQ(PauliOperator::hermitian({1}, {1}).str(), "+Y");
    EXPECT_EQ(PauliOperator::hermitian({1}, {1}).phase(), 1);
    EXPECT_EQ(PauliOperator::hermitian({1, 0}, {1, 1}).str(), "+YZ");
    EXPECT_EQ(PauliOperator::hermitian({0, 1}, {0, 0}).str(), "+IX");
    EXPECT_THROW(PauliOperator::hermitian({1, 0}, {1}), DimensionError);
}

TEST(PauliHermitian, yz_matches_dense_construction) {
    // i (XZ (x) Z) built from explicit matrices
    Mat x = dense_from_text("+X"), z = dense_from_text("+Z");
    Mat xz = matmul(x, z);
    Mat expect = kron(xz, z);
    for (auto &row : expect)
        for (auto &v : row) v *= Complex(0, 1);
    EXPECT_LT(distance(dense(PauliOperator::hermitian({1, 0}, {1, 1})), expect), 1e-12);
}

TEST(PauliHermitian, always_squares_to_identity) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5000; t++) {
        size_t n = 1 + rng() % 12;
        PauliOperator g = PauliOperator::hermitian(random_bits(rng, n), random_bits(rng, n));
        PauliOperator sq = g * g;
        EXPECT_TRUE(sq.is_identity());
        EXPECT_EQ(sq.phase(), 0);
        EXPECT_EQ(g.str()[0], '+');
    }
}

TEST(PauliWeight, examples) {
    EXPECT_EQ(PauliOperator::parse("+XZZXI").weight(), 4u);
    EXPECT_EQ(PauliOperator(7).weight(), 0u);
    EXPECT_EQ(PauliOperator::parse("+YIZ").weight(), 2u);
}

TEST(PauliProperties, bilinearity) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20000; t++) {
        size_t n = 1 + rng() % 8;
        PauliOperator p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
        ASSERT_EQ(anticommutes(p * q, r), anticommutes(p, r) != anticommutes(q, r));
    }
}

TEST(PauliProperties, associative_and_anticommutation_consistent) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10000; t++) {
        size_t n = 1 + rng() % 8;
        PauliOperator p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
        ASSERT_EQ((p * q) * r, p * (q * r));
        PauliOperator pq = p * q, qp = q * p;
        ASSERT_TRUE(pq.same_support(qp));
        ASSERT_EQ((pq.phase() - qp.phase() + 4) % 4, anticommutes(p, q) ? 2 : 0);
    }
}

TEST(PauliProperties, exhaustive_dense_agreement_up_to_two_qubits) {
    for (size_t n = 1; n <= 2; n++) {
        size_t count = size_t{1} << (2 * n);
        std::vector<PauliOperator> all;
        for (size_t code = 0; code < count; code++) {
            BitVector x(n), z(n);
            for (size_t q = 0; q < n; q++) {
                x.set(q, (code >> q) & 1);
                z.set(q, (code >> (q + n)) & 1);
            }
            for (uint8_t ph = 0; ph < 4; ph++) {
                all.emplace_back(ph, x, z);
            }
        }
        for (const auto &p : all) {
            Mat mp = dense(p);
            for (const auto &q : all) {
                Mat mq = dense(q);
                ASSERT_LT(distance(dense(p * q), matmul(mp, mq)), 1e-12) << p.str() << " * " << q.str();
                bool commute = distance(matmul(mp, mq), matmul(mq, mp)) < 1e-12;
                ASSERT_EQ(!commute, anticommutes(p, q));
            }
        }
    }
}

TEST(PauliProperties, random_dense_agreement_three_qubits) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; t++) {
        PauliOperator p = random_pauli(rng, 3), q = random_pauli(rng, 3);
        Mat mp = dense(p), mq = dense(q);
        ASSERT_LT(distance(dense(p * q), matmul(mp, mq)), 1e-12);
        bool commute = distance(matmul(mp, mq), matmul(mq, mp)) < 1e-12;
        ASSERT_EQ(!commute, anticommutes(p, q));
    }
}

TEST(PauliOps, negated_positive_and_single) {
    PauliOperator p = PauliOperator::parse("-XYZ");
    EXPECT_EQ(p.negated().str(), "+XYZ");
    EXPECT_EQ(p.positive().str(), "+XYZ");
    EXPECT_TRUE(p.is_negative());
    EXPECT_EQ(PauliOperator::single(3, 1, 'Y').str(), "+IYI");
    EXPECT_EQ(p.letter(1), 'Y');
    EXPECT_FALSE(PauliOperator::parse("+iX").is_hermitian());
    EXPECT_TRUE(PauliOperator::parse("+XXII").is_css_type());
    EXPECT_FALSE(PauliOperator::parse("+XZII").is_css_type());
}
