//
//  ladder.hpp
//  ladder
//

#ifndef ladder_ladder_hpp
#define ladder_ladder_hpp

#include "ladder/bisect.hpp"
#include "ladder/conic.hpp"
#include "ladder/solver.hpp"
#include "ladder/triangle.hpp"
#include "ladder/verify.hpp"

#endif /* ladder_ladder_hpp */
