#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grunbaum.hpp"
#include "support/corpus.hpp"

namespace grunbaum {
namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::PreconditionViolation;
}

Graph without_edge(const Graph& g, std::pair<Vertex, Vertex> drop) {
  Graph out(g.num_vertices());
  for (auto e : g.edges())
    if (e != drop) out.add_edge(e.first, e.second);
  return out;
}

bool is_match(const Graph& host, const Graph& pattern, const SubgraphMatch& m) {
  std::set<Vertex> image(m.map.begin(), m.map.end());
  if (image.size() != m.map.size()) return false;
  for (auto [u, v] : pattern.edges())
    if (!host.adjacent(m.map[u], m.map[v])) return false;
  return true;
}

// --------------------------------------------------------- chromatic number

TEST(ChromaticNumber, KnownTable) {
  EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
  EXPECT_EQ(chromatic_number(complete_graph(7)), 7);
  EXPECT_EQ(chromatic_number(c11_cubed_graph()), 6);
  EXPECT_EQ(chromatic_number(c3c5_graph()), 6);
  EXPECT_EQ(chromatic_number(h7k2_graph()), 6);
  EXPECT_EQ(chromatic_number(h7_graph()), 4);
}

TEST(ChromaticNumber, SmallGraphs) {
  EXPECT_EQ(chromatic_number(Graph(3)), 1);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(octahedron().graph()), 3);
  EXPECT_EQ(chromatic_number(icosahedron().graph()), 4);
  EXPECT_EQ(chromatic_number(gen_altshuler(3, 3, 0).embedding.graph()), 3);
}

TEST(ChromaticNumber, WitnessIsOptimalAndProper) {
  for (const Graph& g : {c11_cubed_graph(), h7k2_graph(), h7_graph(), icosahedron().graph()}) {
    const auto r = chromatic_number_with_witness(g);
    ASSERT_EQ(static_cast<int>(r.coloring.size()), g.num_vertices());
    for (auto [u, v] : g.edges()) EXPECT_NE(r.coloring[u], r.coloring[v]);
    EXPECT_EQ(*std::max_element(r.coloring.begin(), r.coloring.end()) + 1, r.chromatic_number);
    EXPECT_LE(static_cast<int>(r.clique.size()), r.chromatic_number);
    for (std::size_t i = 0; i < r.clique.size(); ++i)
      for (std::size_t j = i + 1; j < r.clique.size(); ++j) EXPECT_TRUE(g.adjacent(r.clique[i], r.clique[j]));
  }
}

TEST(ChromaticNumber, CriticalGraphsDropAfterAnyEdgeDeletion) {
  for (const Graph& g : {complete_graph(6), c11_cubed_graph(), c3c5_graph(), h7k2_graph()}) {
    ASSERT_EQ(chromatic_number(g), 6);
    for (auto e : g.edges()) EXPECT_LE(chromatic_number(without_edge(g, e)), 5);
  }
}

TEST(ChromaticNumber, H7IsCriticalFourChromatic) {
  const Graph h7 = h7_graph();
  EXPECT_EQ(h7.num_vertices(), 7);
  EXPECT_EQ(h7.num_edges(), 11);
  for (auto e : h7.edges()) EXPECT_EQ(chromatic_number(without_edge(h7, e)), 3);
}

TEST(ChromaticNumber, MonotoneUnderSubgraph) {
  // Deleting a vertex from a corpus triangulation never raises χ.
  std::mt19937_64 rng(4);
  const auto& corpus = support::torus_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 9) {
    const Graph g = corpus[i].embedding.graph();
    const int chi = chromatic_number(g);
    EXPECT_EQ(chi, corpus[i].chi);
    const Vertex drop = static_cast<Vertex>(rng() % g.num_vertices());
    Graph h(g.num_vertices());
    for (auto [u, v] : g.edges())
      if (u != drop && v != drop) h.add_edge(u, v);
    EXPECT_LE(chromatic_number(h), chi);
    const auto e = g.edges()[rng() % g.num_edges()];
    EXPECT_LE(chromatic_number(without_edge(g, e)), chi);
  }
}

TEST(ChromaticNumber, BudgetExceeded) {
  Budget tiny;
  tiny.nodes = 2;
  EXPECT_EQ(error_of([&] { chromatic_number(c11_cubed_graph(), tiny); }), ErrorCode::BudgetExceeded);
}

TEST(KColoring, Examples) {
  EXPECT_TRUE(k_coloring(c11_cubed_graph(), 6).has_value());
  EXPECT_FALSE(k_coloring(c11_cubed_graph(), 5).has_value());
  EXPECT_FALSE(k_coloring(h7_graph(), 3).has_value());
}

// ---------------------------------------------------------- subgraph search

TEST(FindSubgraph, SpecExamples) {
  const Graph k7 = complete_graph(7);
  const auto m = find_subgraph(k7, Pattern::K6);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(is_match(k7, complete_graph(6), *m));
  EXPECT_FALSE(find_subgraph(c11_cubed_graph(), Pattern::K6).has_value());

  const auto h7k2 = gen_h7k2();
  const Embedding refined = random_refinement(split_fill_faces(h7k2.embedding), 6, 3);
  const auto hit = find_subgraph(refined.graph(), Pattern::H7K2);
  ASSERT_TRUE(hit.has_value());
  EXPECT_TRUE(is_match(refined.graph(), h7k2_graph(), *hit));
  for (Vertex v : hit->map) EXPECT_LT(v, h7k2.embedding.num_vertices());
}

TEST(FindSubgraph, DeterministicFirstMatch) {
  const Graph g = gen_named("K7").graph();
  const auto a = find_subgraph(g, Pattern::K6);
  const auto b = find_subgraph(g, Pattern::K6);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->map, b->map);
}

TEST(FindSubgraph, PatternsInTheirOwnGraphs) {
  for (Pattern p : kPatternOrder) {
    const Graph g = pattern_graph(p);
    const auto m = find_subgraph(g, p);
    ASSERT_TRUE(m.has_value()) << to_string(p);
    EXPECT_EQ(m->pattern, p);
    EXPECT_TRUE(is_match(g, g, *m));
  }
}

// ------------------------------------------------------------ classification

TEST(ClassifySixChromatic, SpecExamples) {
  const Embedding p54 = stellate_face(split_fill_faces(gen_k6(K6Variant::P54).embedding), 0);
  EXPECT_EQ(classify_six_chromatic(p54.graph()).pattern, Pattern::K6);

  const Embedding c3c5 = random_refinement(split_fill_faces(gen_c3c5().embedding), 5, 2);
  ASSERT_EQ(chromatic_number(c3c5.graph()), 6);
  EXPECT_EQ(classify_six_chromatic(c3c5.graph()).pattern, Pattern::C3C5);

  EXPECT_EQ(error_of([] { classify_six_chromatic(complete_graph(7)); }), ErrorCode::PreconditionViolation);
}

TEST(ClassifySixChromatic, CatalogGraphs) {
  EXPECT_EQ(classify_six_chromatic(c11_cubed_graph()).pattern, Pattern::C11Cubed);
  EXPECT_EQ(classify_six_chromatic(h7k2_graph()).pattern, Pattern::H7K2);
  EXPECT_EQ(classify_six_chromatic(c3c5_graph()).pattern, Pattern::C3C5);
  EXPECT_EQ(classify_six_chromatic(complete_graph(6)).pattern, Pattern::K6);
}

TEST(ClassifySixChromatic, NoPatternIsAnomaly) {
  EXPECT_EQ(error_of([] { classify_six_chromatic(cycle_graph(5)); }), ErrorCode::ClassificationAnomaly);
}

TEST(ClassifySixChromatic, CorpusSample) {
  int checked = 0;
  const auto& corpus = support::torus_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 5) {
    if (corpus[i].chi != 6) continue;
    const auto m = classify_six_chromatic(corpus[i].embedding.graph());
    const std::string method = corpus[i].expected_method;
    const std::string pattern(to_string(m.pattern));
    EXPECT_NE(method.find(pattern), std::string::npos) << corpus[i].name;
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace grunbaum
