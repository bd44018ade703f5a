#pragma once

// Umbrella header for the whole library.

#include "grunbaum/error.hpp"
#include "grunbaum/budget.hpp"
#include "grunbaum/graph.hpp"
#include "grunbaum/embedding.hpp"
#include "grunbaum/surgery.hpp"
#include "grunbaum/isomorphism.hpp"
#include "grunbaum/disk.hpp"
#include "grunbaum/coloring.hpp"
#include "grunbaum/signature.hpp"
#include "grunbaum/kempe.hpp"
#include "grunbaum/exact.hpp"
#include "grunbaum/chroma.hpp"
#include "grunbaum/subgraph.hpp"
#include "grunbaum/catalog.hpp"
#include "grunbaum/figures.hpp"
#include "grunbaum/case_tables.hpp"
#include "grunbaum/solver.hpp"
#include "grunbaum/io.hpp"
#include "grunbaum/manifest.hpp"
