#pragma once

#include "pseudoform/catalog.hpp"
#include "pseudoform/complex.hpp"
#include "pseudoform/constructions.hpp"
#include "pseudoform/decompose.hpp"
#include "pseudoform/face_vectors.hpp"
#include "pseudoform/golden.hpp"
#include "pseudoform/io.hpp"
#include "pseudoform/isomorphism.hpp"
#include "pseudoform/pcb.hpp"
#include "pseudoform/pseudomanifold.hpp"
#include "pseudoform/recognition.hpp"
#include "pseudoform/relmin.hpp"
#include "pseudoform/rigidity.hpp"
#include "pseudoform/trace.hpp"
