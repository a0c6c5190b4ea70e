#pragma once

#include "hypaut/commands.hpp"
#include "hypaut/coxeter.hpp"
#include "hypaut/decisions.hpp"
#include "hypaut/document.hpp"
#include "hypaut/errors.hpp"
#include "hypaut/graph.hpp"
#include "hypaut/graph_product.hpp"
#include "hypaut/graph_props.hpp"
#include "hypaut/random_models.hpp"
#include "hypaut/report.hpp"
#include "hypaut/verdict.hpp"
#include "hypaut/vertex_set.hpp"
#include "hypaut/words.hpp"
