#include "nonbasis/sumset.hpp"

namespace nonbasis {

Subset translate(const GroupType& G, const Subset& S, int g) {
    Subset out(G.order());
    if (const std::uint16_t* row = G.table()) {
        const std::uint16_t* r = row + std::size_t(g) * G.order();
        S.for_each([&](int i) { out.set(r[i]); });
    } else {
        S.for_each([&](int i) { out.set(G.add(g, i)); });
    }
    return out;
}

Subset sumset(const GroupType& G, const Subset& A, const Subset& B) {
    if (A.empty() || B.empty())
        throw Error(Errc::empty_set, "sumset of an empty set");
    Subset out(G.order());
    A.for_each([&](int a) { out |= translate(G, B, a); });
    return out;
}

Subset hfold(const GroupType& G, const Subset& A, int h) {
    if (A.empty()) throw Error(Errc::empty_set, "h-fold sumset of an empty set");
    if (h < 1) throw Error(Errc::invalid_h, "h must be >= 1");
    // Repeated doubling on the sumset monoid with identity {0}.
    Subset acc = Subset::single(G.order(), 0);
    Subset base = A;
    int e = h;
    while (e > 0) {
        if (e & 1) acc = sumset(G, acc, base);
        e >>= 1;
        if (e) base = sumset(G, base, base);
    }
    return acc;
}

Subgroup stabilizer_of(const GroupType& G, const Subset& S) {
    if (S.empty()) throw Error(Errc::empty_set, "stabilizer of an empty set");
    const int n = G.order();
    Subset H(n);
    for (int g = 0; g < n; ++g)
        if (translate(G, S, g) == S) H.set(g);
    return subgroup_from_members(G, H);
}

bool is_union_of_cosets(const GroupType& G, const Subset& S, const Subgroup& H) {
    bool ok = true;
    H.members.for_each([&](int g) {
        if (!(translate(G, S, g) == S)) ok = false;
    });
    return ok;
}

SumsetCertificate certify(const GroupType& G, const Subset& A, int h) {
    if (A.empty()) throw Error(Errc::empty_set, "certify of an empty set");
    SumsetCertificate cert;
    cert.hsum = hfold(G, A, h);
    cert.set_size = A.size();
    cert.hfold_size = cert.hsum.size();
    cert.stabilizer = stabilizer_of(G, cert.hsum);
    cert.kneser_bound = (long long)h * cert.set_size - (long long)(h - 1) * cert.stabilizer.order;
    cert.complete = cert.hsum.is_full();
    if (cert.hfold_size < cert.kneser_bound)
        throw Error(Errc::engine_invariant, "Kneser inequality violated (engine bug)");
    if (cert.hfold_size % cert.stabilizer.order != 0 ||
        !is_union_of_cosets(G, cert.hsum, cert.stabilizer))
        throw Error(Errc::engine_invariant, "hA is not a union of stabilizer cosets (engine bug)");
    cert.k2 = cert.hfold_size / cert.stabilizer.order;
    int k1 = 0;
    for (const Subset& C : coset_decomposition(G, cert.stabilizer))
        if (!(C & A).empty()) ++k1;
    cert.k1 = k1;
    return cert;
}

} // namespace nonbasis
