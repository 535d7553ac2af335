#include <gtest/gtest.h>

#include <sstream>

#include "degen/certificate.hpp"
#include "degen/errors.hpp"
#include "degen/generators.hpp"
#include "degen/reducer.hpp"

namespace degen {
namespace {

struct Fixture {
  Graph graph;
  ExtractionCertificate cert;
};

Fixture make(std::size_t n, std::uint64_t seed) {
  Fixture f{random_triangulation(n, seed, 5).graph(), {}};
  f.cert = extract(f.graph).certificate;
  return f;
}

TEST(Certificate, JsonRoundTrip) {
  const Fixture f = make(120, 1);
  const std::string text = certificate_to_json(f.cert);
  EXPECT_EQ(text.find('\n'), std::string::npos);
  const ExtractionCertificate back = certificate_from_json(text);
  EXPECT_EQ(back, f.cert);
  EXPECT_TRUE(verify_certificate(f.graph, back).ok);
}

TEST(Certificate, RationalsAreStrings) {
  const Graph ico = named_graph("icosahedron").graph();
  const std::string text = certificate_to_json(extract(ico).certificate);
  EXPECT_NE(text.find("\"gamma\":\"1/1\""), std::string::npos) << text;
}

TEST(Certificate, StreamSkipsHeadersAndBlanks) {
  const Fixture a = make(60, 2);
  const Fixture b = make(70, 3);
  std::stringstream ss;
  ss << "{\"header\":{\"tool\":\"x\"}}\n" << certificate_to_json(a.cert) << "\n\n"
     << certificate_to_json(b.cert) << "\n";
  const auto certs = read_certificates(ss);
  ASSERT_EQ(certs.size(), 2u);
  EXPECT_EQ(certs[0], a.cert);
  EXPECT_EQ(certs[1], b.cert);
}

TEST(Certificate, MalformedJson) {
  EXPECT_THROW(certificate_from_json("{"), FormatError);
  EXPECT_THROW(certificate_from_json(R"({"gamma":"1/1","events":[{"op":"eat","v":1}],"deletions":[]})"),
               FormatError);
  EXPECT_THROW(certificate_from_json(R"({"gamma":0.5,"events":[],"deletions":[]})"), FormatError);
}

TEST(Certificate, TamperingIsCaught) {
  const Fixture f = make(150, 4);
  ASSERT_FALSE(f.cert.deletions.empty());

  auto wrong_gamma = f.cert;
  wrong_gamma.original_gamma += Rational(1, 36);
  EXPECT_FALSE(verify_certificate(f.graph, wrong_gamma).ok);

  // Turning the first deletion into a collect is illegal: the graph has
  // minimum degree 5 at that point.
  auto promoted = f.cert;
  for (auto& e : promoted.events)
    if (e.op == CertificateEvent::Op::del) {
      e.op = CertificateEvent::Op::collect;
      break;
    }
  const auto r = verify_certificate(f.graph, promoted);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.event.has_value());

  auto dropped = f.cert;
  dropped.events.pop_back();
  EXPECT_FALSE(verify_certificate(f.graph, dropped).ok);

  auto doubled = f.cert;
  doubled.events.push_back(doubled.events.front());
  EXPECT_FALSE(verify_certificate(f.graph, doubled).ok);

  auto unlisted = f.cert;
  unlisted.deletions.pop_back();
  EXPECT_FALSE(verify_certificate(f.graph, unlisted).ok);
}

TEST(Certificate, OverBudgetIsCaught) {
  // Deleting every vertex is legal replay but spends far more than gamma.
  const Graph g = named_graph("icosahedron").graph();
  ExtractionCertificate cert{Rational(1), {}, {}};
  for (VertexId v : g.vertices()) {
    cert.deletions.push_back(v);
    cert.events.push_back({CertificateEvent::Op::del, v});
  }
  const auto r = verify_certificate(g, cert);
  EXPECT_FALSE(r.ok);
}

}  // namespace
}  // namespace degen
