#ifndef PMPLAN_DOMAINS_PDDL_SOURCES_HPP
#define PMPLAN_DOMAINS_PDDL_SOURCES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmplan::domains {

// IPC-2000 Logistics, typed STRIPS.
inline constexpr std::string_view kLogisticsDomain = R"PDDL(
(define (domain logistics)
  (:requirements :strips :typing)
  (:types truck airplane - vehicle
          package vehicle - physobj
          airport location - place
          city place physobj - object)
  (:predicates (in-city ?loc - place ?city - city)
               (at ?obj - physobj ?loc - place)
               (in ?pkg - package ?veh - vehicle))

  (:action load-truck
    :parameters (?pkg - package ?truck - truck ?loc - place)
    :precondition (and (at ?truck ?loc) (at ?pkg ?loc))
    :effect (and (not (at ?pkg ?loc)) (in ?pkg ?truck)))

  (:action load-airplane
    :parameters (?pkg - package ?airplane - airplane ?loc - place)
    :precondition (and (at ?pkg ?loc) (at ?airplane ?loc))
    :effect (and (not (at ?pkg ?loc)) (in ?pkg ?airplane)))

  (:action unload-truck
    :parameters (?pkg - package ?truck - truck ?loc - place)
    :precondition (and (at ?truck ?loc) (in ?pkg ?truck))
    :effect (and (not (in ?pkg ?truck)) (at ?pkg ?loc)))

  (:action unload-airplane
    :parameters (?pkg - package ?airplane - airplane ?loc - place)
    :precondition (and (in ?pkg ?airplane) (at ?airplane ?loc))
    :effect (and (not (in ?pkg ?airplane)) (at ?pkg ?loc)))

  (:action drive-truck
    :parameters (?truck - truck ?loc-from - place ?loc-to - place ?city - city)
    :precondition (and (at ?truck ?loc-from) (in-city ?loc-from ?city) (in-city ?loc-to ?city))
    :effect (and (not (at ?truck ?loc-from)) (at ?truck ?loc-to)))

  (:action fly-airplane
    :parameters (?airplane - airplane ?loc-from - airport ?loc-to - airport)
    :precondition (at ?airplane ?loc-from)
    :effect (and (not (at ?airplane ?loc-from)) (at ?airplane ?loc-to)))
)
)PDDL";

// IPC-2000 Grid, typed STRIPS.
inline constexpr std::string_view kGridDomain = R"PDDL(
(define (domain grid)
  (:requirements :strips :typing)
  (:types place key shape)
  (:predicates (conn ?x - place ?y - place)
               (key-shape ?k - key ?s - shape)
               (lock-shape ?x - place ?s - shape)
               (at ?k - key ?x - place)
               (at-robot ?x - place)
               (locked ?x - place)
               (holding ?k - key)
               (open ?x - place)
               (arm-empty))

  (:action unlock
    :parameters (?curpos - place ?lockpos - place ?key - key ?shape - shape)
    :precondition (and (conn ?curpos ?lockpos) (key-shape ?key ?shape)
                       (lock-shape ?lockpos ?shape) (at-robot ?curpos)
                       (locked ?lockpos) (holding ?key))
    :effect (and (open ?lockpos) (not (locked ?lockpos))))

  (:action move
    :parameters (?curpos - place ?nextpos - place)
    :precondition (and (at-robot ?curpos) (conn ?curpos ?nextpos) (open ?nextpos))
    :effect (and (at-robot ?nextpos) (not (at-robot ?curpos))))

  (:action pickup
    :parameters (?curpos - place ?key - key)
    :precondition (and (at-robot ?curpos) (at ?key ?curpos) (arm-empty))
    :effect (and (holding ?key) (not (at ?key ?curpos)) (not (arm-empty))))

  (:action pickup-and-loose
    :parameters (?curpos - place ?newkey - key ?oldkey - key)
    :precondition (and (at-robot ?curpos) (holding ?oldkey) (at ?newkey ?curpos))
    :effect (and (holding ?newkey) (at ?oldkey ?curpos)
                 (not (holding ?oldkey)) (not (at ?newkey ?curpos))))

  (:action putdown
    :parameters (?curpos - place ?key - key)
    :precondition (and (at-robot ?curpos) (holding ?key))
    :effect (and (arm-empty) (at ?key ?curpos) (not (holding ?key))))
)
)PDDL";

// Unit-cost Woodworking with pickup and delivery: one truck moves boards to
// the workshop and finished parts to their destinations; the machines (saw,
// grinder, varnisher, sprayer) sit at the workshop.
inline constexpr std::string_view kWoodworkingDomain = R"PDDL(
(define (domain woodworking-pd)
  (:requirements :strips :typing)
  (:types board part - woodobj
          location truck colour size woodobj - object)
  (:predicates (road ?from - location ?to - location)
               (workshop ?l - location)
               (truck-at ?t - truck ?l - location)
               (at ?o - woodobj ?l - location)
               (in-truck ?o - woodobj ?t - truck)
               (unused ?p - part)
               (available ?p - part)
               (board-size ?b - board ?s - size)
               (size-next ?smaller - size ?larger - size)
               (rough ?p - part)
               (smooth ?p - part)
               (untreated ?p - part)
               (varnished ?p - part)
               (colourless ?p - part)
               (coloured ?p - part ?c - colour)
               (spray-colour ?c - colour))

  (:action move-truck
    :parameters (?t - truck ?from - location ?to - location)
    :precondition (and (truck-at ?t ?from) (road ?from ?to))
    :effect (and (not (truck-at ?t ?from)) (truck-at ?t ?to)))

  (:action pickup
    :parameters (?o - woodobj ?t - truck ?l - location)
    :precondition (and (at ?o ?l) (truck-at ?t ?l))
    :effect (and (not (at ?o ?l)) (in-truck ?o ?t)))

  (:action drop
    :parameters (?o - woodobj ?t - truck ?l - location)
    :precondition (and (in-truck ?o ?t) (truck-at ?t ?l))
    :effect (and (not (in-truck ?o ?t)) (at ?o ?l)))

  (:action cut
    :parameters (?b - board ?p - part ?l - location ?after - size ?before - size)
    :precondition (and (workshop ?l) (at ?b ?l) (unused ?p)
                       (board-size ?b ?before) (size-next ?after ?before))
    :effect (and (not (unused ?p)) (available ?p) (at ?p ?l)
                 (rough ?p) (untreated ?p) (colourless ?p)
                 (not (board-size ?b ?before)) (board-size ?b ?after)))

  (:action grind
    :parameters (?p - part ?l - location)
    :precondition (and (workshop ?l) (at ?p ?l) (rough ?p))
    :effect (and (not (rough ?p)) (smooth ?p)))

  (:action varnish
    :parameters (?p - part ?l - location)
    :precondition (and (workshop ?l) (at ?p ?l) (smooth ?p) (untreated ?p))
    :effect (and (not (untreated ?p)) (varnished ?p)))

  (:action spray
    :parameters (?p - part ?c - colour ?l - location)
    :precondition (and (workshop ?l) (at ?p ?l) (colourless ?p) (spray-colour ?c))
    :effect (and (not (colourless ?p)) (coloured ?p ?c)))
)
)PDDL";

inline std::string_view domain_pddl(const std::string& domain) {
    if (domain == "logistics") return kLogisticsDomain;
    if (domain == "grid") return kGridDomain;
    if (domain == "woodworking") return kWoodworkingDomain;
    throw std::invalid_argument("unknown domain '" + domain + "'");
}

} // namespace pmplan::domains

#endif // PMPLAN_DOMAINS_PDDL_SOURCES_HPP
